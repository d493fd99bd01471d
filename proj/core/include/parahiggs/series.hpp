#ifndef PARAHIGGS_SERIES_HPP
#define PARAHIGGS_SERIES_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "parahiggs/laurent.hpp"

namespace parahiggs {

/// Finite polynomial in the auxiliary variables x, y with LaurentPoly
/// coefficients; exponents are >= 0 (monomial prefactors with negative
/// exponents live on CoeffExpr instead). Used to spell out numerator and
/// denominator factors such as (1+xt)^2g, (1-t^2 x), (1+t^2 xy).
class BiPoly {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (x exponent, y exponent)

  BiPoly() = default;

  static BiPoly zero() { return {}; }
  static BiPoly constant(LaurentPoly c) {
    BiPoly p;
    p.add_term(0, 0, std::move(c));
    return p;
  }
  static BiPoly term(std::int64_t i, std::int64_t j, LaurentPoly c) {
    BiPoly p;
    p.add_term(i, j, std::move(c));
    return p;
  }
  /// (1 + c*x) or (1 + c*y) style binomials and friends are built by addition.
  void add_term(std::int64_t i, std::int64_t j, LaurentPoly c);

  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// All terms have y-exponent 0 (constants count as x-univariate too).
  bool is_x_univariate() const;
  /// All terms have x-exponent 0.
  bool is_y_univariate() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  BiPoly pow(unsigned long n) const;

 private:
  std::map<Key, LaurentPoly> terms_;
};

/// (1 + coeff_of_v * v)^n expanded exactly, v being either x or y.
BiPoly binomial_pow(const LaurentPoly& coeff_of_v, bool in_y, unsigned long n);

/// Power series in x truncated at a fixed order N: coefficients of
/// x^0..x^N, each a LaurentPoly in t. Arithmetic truncates to the smaller
/// operand order, so results are exact as far as they are stored.
class TruncSeries {
 public:
  explicit TruncSeries(std::int64_t order);

  static TruncSeries from_poly(const BiPoly& p, std::int64_t order, bool in_y = false);

  std::int64_t order() const { return order_; }
  const LaurentPoly& coeff(std::int64_t k) const;
  void set_coeff(std::int64_t k, LaurentPoly c);

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

 private:
  std::int64_t order_;
  std::vector<LaurentPoly> coeffs_;
};

/// Series inverse up to the operand's order. The constant coefficient must
/// be a single monomial +-t^k (all denominators in scope look like 1-x,
/// 1-t^2 x, t^2-x, 1-t^4 x or 1-t^-2 x); otherwise NonUnitLeadingTerm.
TruncSeries ts_inv(const TruncSeries& d);

/// Power series in x and y truncated at orders (Nx, Ny).
class BiSeries {
 public:
  BiSeries(std::int64_t order_x, std::int64_t order_y);

  static BiSeries from_poly(const BiPoly& p, std::int64_t order_x, std::int64_t order_y);
  /// Promote a univariate series to a biseries constant in the other variable.
  static BiSeries from_x_series(const TruncSeries& s, std::int64_t order_y);
  static BiSeries from_y_series(const TruncSeries& s, std::int64_t order_x);

  std::int64_t order_x() const { return nx_; }
  std::int64_t order_y() const { return ny_; }
  const LaurentPoly& coeff(std::int64_t i, std::int64_t j) const;
  void set_coeff(std::int64_t i, std::int64_t j, LaurentPoly c);

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

 private:
  std::int64_t nx_, ny_;
  std::vector<LaurentPoly> coeffs_;  // (nx+1) x (ny+1), row-major in x
};

/// A product of polynomial factors and inverted denominator factors,
/// scaled by scalar * x^x_shift * y^y_shift. The shifts may be negative
/// or positive; extraction folds them into the requested coefficient
/// index. Denominators must be univariate in x or in y (every case in
/// scope separates; mixed factors only ever appear as numerators).
struct CoeffExpr {
  LaurentPoly scalar = LaurentPoly::one();
  std::int64_t x_shift = 0;
  std::int64_t y_shift = 0;
  std::vector<BiPoly> numerators;
  std::vector<BiPoly> denominators;
};

/// Coefficient of x^kx y^ky in the expansion of expr; exact. A requested
/// index below the series support (effective index negative) yields 0.
LaurentPoly extract_coeff(const CoeffExpr& expr, std::int64_t kx, std::int64_t ky);

/// Convenience for expressions without y-dependence.
LaurentPoly extract_coeff_x(const CoeffExpr& expr, std::int64_t kx);

}  // namespace parahiggs

#endif
