#include "parahiggs/series.hpp"

#include <stdexcept>

#include "parahiggs/errors.hpp"

namespace parahiggs {

// ---------------------------------------------------------------- BiPoly

void BiPoly::add_term(std::int64_t i, std::int64_t j, LaurentPoly c) {
  if (i < 0 || j < 0) throw std::logic_error("BiPoly exponents must be non-negative");
  if (c.is_zero()) return;
  auto key = Key{i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiPoly::is_x_univariate() const {
  for (const auto& [k, c] : terms_)
    if (k.second != 0) return false;
  return true;
}

bool BiPoly::is_y_univariate() const {
  for (const auto& [k, c] : terms_)
    if (k.first != 0) return false;
  return true;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiPoly BiPoly::pow(unsigned long n) const {
  BiPoly result = BiPoly::constant(LaurentPoly::one());
  BiPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

BiPoly binomial_pow(const LaurentPoly& coeff_of_v, bool in_y, unsigned long n) {
  // (1 + c v)^n = sum_k C(n,k) c^k v^k
  BiPoly out;
  LaurentPoly cpow = LaurentPoly::one();
  for (unsigned long k = 0; k <= n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    out.add_term(in_y ? 0 : static_cast<std::int64_t>(k),
                 in_y ? static_cast<std::int64_t>(k) : 0,
                 LaurentPoly(binom) * cpow);
    cpow *= coeff_of_v;
  }
  return out;
}

// ----------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(std::int64_t order) : order_(order) {
  if (order < 0) throw std::logic_error("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::from_poly(const BiPoly& p, std::int64_t order, bool in_y) {
  TruncSeries s(order);
  for (const auto& [k, c] : p.terms()) {
    const std::int64_t e = in_y ? k.second : k.first;
    const std::int64_t other = in_y ? k.first : k.second;
    if (other != 0) throw std::logic_error("from_poly: factor not univariate in chosen variable");
    if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] += c;
  }
  return s;
}

const LaurentPoly& TruncSeries::coeff(std::int64_t k) const {
  static const LaurentPoly kZero;
  if (k < 0 || k > order_) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void TruncSeries::set_coeff(std::int64_t k, LaurentPoly c) {
  if (k < 0 || k > order_) throw std::logic_error("set_coeff out of range");
  coeffs_[static_cast<std::size_t>(k)] = std::move(c);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order_, b.order_));
  for (std::int64_t k = 0; k <= out.order_; ++k)
    out.coeffs_[static_cast<std::size_t>(k)] =
        a.coeffs_[static_cast<std::size_t>(k)] + b.coeffs_[static_cast<std::size_t>(k)];
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order_, b.order_));
  for (std::int64_t i = 0; i <= out.order_; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (std::int64_t j = 0; i + j <= out.order_; ++j) {
      if (b.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

TruncSeries ts_inv(const TruncSeries& d) {
  const LaurentPoly& d0 = d.coeff(0);
  if (d0.is_zero() || d0.terms().size() != 1)
    throw NonUnitLeadingTerm("series constant term is not a monomial: " + d0.to_string());
  const auto& [lead_exp, lead_coeff] = *d0.terms().begin();
  if (lead_coeff != 1 && lead_coeff != -1)
    throw NonUnitLeadingTerm("series constant term coefficient is not +-1: " + d0.to_string());

  // unit = 1/d0; with coefficient +-1 the inverse is +-t^{-k}.
  const LaurentPoly unit = LaurentPoly::monomial(lead_coeff, -lead_exp);

  TruncSeries q(d.order());
  q.set_coeff(0, unit);
  for (std::int64_t n = 1; n <= d.order(); ++n) {
    LaurentPoly acc;
    for (std::int64_t i = 1; i <= n; ++i) acc += d.coeff(i) * q.coeff(n - i);
    q.set_coeff(n, -(unit * acc));
  }
  return q;
}

// -------------------------------------------------------------- BiSeries

BiSeries::BiSeries(std::int64_t order_x, std::int64_t order_y) : nx_(order_x), ny_(order_y) {
  if (order_x < 0 || order_y < 0) throw std::logic_error("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>((nx_ + 1) * (ny_ + 1)));
}

BiSeries BiSeries::from_poly(const BiPoly& p, std::int64_t order_x, std::int64_t order_y) {
  BiSeries s(order_x, order_y);
  for (const auto& [k, c] : p.terms())
    if (k.first <= order_x && k.second <= order_y) s.set_coeff(k.first, k.second, c);
  return s;
}

BiSeries BiSeries::from_x_series(const TruncSeries& s, std::int64_t order_y) {
  BiSeries out(s.order(), order_y);
  for (std::int64_t i = 0; i <= s.order(); ++i) out.set_coeff(i, 0, s.coeff(i));
  return out;
}

BiSeries BiSeries::from_y_series(const TruncSeries& s, std::int64_t order_x) {
  BiSeries out(order_x, s.order());
  for (std::int64_t j = 0; j <= s.order(); ++j) out.set_coeff(0, j, s.coeff(j));
  return out;
}

const LaurentPoly& BiSeries::coeff(std::int64_t i, std::int64_t j) const {
  static const LaurentPoly kZero;
  if (i < 0 || i > nx_ || j < 0 || j > ny_) return kZero;
  return coeffs_[static_cast<std::size_t>(i * (ny_ + 1) + j)];
}

void BiSeries::set_coeff(std::int64_t i, std::int64_t j, LaurentPoly c) {
  if (i < 0 || i > nx_ || j < 0 || j > ny_) throw std::logic_error("set_coeff out of range");
  coeffs_[static_cast<std::size_t>(i * (ny_ + 1) + j)] = std::move(c);
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
  for (std::int64_t i = 0; i <= out.nx_; ++i)
    for (std::int64_t j = 0; j <= out.ny_; ++j) out.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.nx_, b.nx_), std::min(a.ny_, b.ny_));
  for (std::int64_t i = 0; i <= out.nx_; ++i)
    for (std::int64_t j = 0; j <= out.ny_; ++j) {
      if (a.coeff(i, j).is_zero()) continue;
      for (std::int64_t k = 0; i + k <= out.nx_; ++k)
        for (std::int64_t l = 0; j + l <= out.ny_; ++l) {
          if (b.coeff(k, l).is_zero()) continue;
          out.set_coeff(i + k, j + l, out.coeff(i + k, j + l) + a.coeff(i, j) * b.coeff(k, l));
        }
    }
  return out;
}

// ---------------------------------------------------------- extract_coeff

LaurentPoly extract_coeff(const CoeffExpr& expr, std::int64_t kx, std::int64_t ky) {
  const std::int64_t ex = kx - expr.x_shift;
  const std::int64_t ey = ky - expr.y_shift;
  // Series have no terms below x^0 y^0.
  if (ex < 0 || ey < 0) return LaurentPoly::zero();

  BiSeries acc = BiSeries::from_poly(BiPoly::constant(LaurentPoly::one()), ex, ey);
  for (const auto& num : expr.numerators) acc = acc * BiSeries::from_poly(num, ex, ey);
  for (const auto& den : expr.denominators) {
    if (den.is_x_univariate()) {
      acc = acc * BiSeries::from_x_series(ts_inv(TruncSeries::from_poly(den, ex, false)), ey);
    } else if (den.is_y_univariate()) {
      acc = acc * BiSeries::from_y_series(ts_inv(TruncSeries::from_poly(den, ey, true)), ex);
    } else {
      throw std::logic_error("denominator factor mixes x and y");
    }
  }
  return expr.scalar * acc.coeff(ex, ey);
}

LaurentPoly extract_coeff_x(const CoeffExpr& expr, std::int64_t kx) {
  return extract_coeff(expr, kx, 0);
}

}  // namespace parahiggs
