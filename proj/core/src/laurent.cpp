#include "parahiggs/laurent.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace parahiggs {

void LaurentPoly::set_coeff(std::int64_t exp, const mpz_class& c) {
  if (c == 0)
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

std::int64_t LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto it = out.terms_.find(ea + eb);
      if (it == out.terms_.end()) {
        out.terms_.emplace(ea + eb, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  // sweep zeros produced by cancellation
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly result = one();
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
  if (is_zero()) return zero();

  const std::int64_t dmin = divisor.min_exp();
  const mpz_class dlead = divisor.coeff(dmin);
  if (dlead != 1 && dlead != -1)
    throw std::logic_error("div_exact requires unit lowest coefficient in divisor");

  // Long division from the lowest exponent upward; exact iff nothing is left.
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const std::int64_t rmin = rem.min_exp();
    mpz_class q = rem.coeff(rmin) * dlead;  // dlead is its own inverse
    quot.terms_[rmin - dmin] = q;
    rem -= divisor.shifted(rmin - dmin) * LaurentPoly(q);
    if (!rem.is_zero() && rem.min_exp() <= rmin) return std::nullopt;  // no progress
  }
  return quot;
}

mpz_class LaurentPoly::eval_unit(int t_value) const {
  assert(t_value == 1 || t_value == -1);
  mpz_class acc = 0;
  for (const auto& [e, c] : terms_) {
    const bool odd = (e % 2) != 0;
    acc += (t_value == -1 && odd) ? -c : c;
  }
  return acc;
}

std::vector<mpz_class> LaurentPoly::coefficients_ascending() const {
  if (is_zero()) return {};
  if (!is_polynomial())
    throw std::logic_error("coefficients_ascending on non-polynomial Laurent value");
  std::vector<mpz_class> out(static_cast<std::size_t>(max_exp()) + 1, mpz_class(0));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str();
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace parahiggs
