#ifndef PARAHIGGS_LAURENT_HPP
#define PARAHIGGS_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace parahiggs {

/// Laurent polynomial in t with arbitrary-precision integer coefficients.
///
/// Exponents may be negative; all arithmetic is exact. The term map never
/// stores a zero coefficient, so equality is plain map equality. This is
/// the universal value type of the library: every stratum contribution and
/// every final Poincare polynomial is a LaurentPoly, and the final results
/// are additionally checked to be honest polynomials (min_exp() >= 0).
class LaurentPoly {
 public:
  using ExpMap = std::map<std::int64_t, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long long c) { set_coeff(0, mpz_class(static_cast<long>(c))); }
  explicit LaurentPoly(const mpz_class& c) { set_coeff(0, c); }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(1); }
  /// The monomial t^exp.
  static LaurentPoly t(std::int64_t exp = 1) { return monomial(1, exp); }
  static LaurentPoly monomial(const mpz_class& coeff, std::int64_t exp) {
    LaurentPoly p;
    p.set_coeff(exp, coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  /// True iff every exponent is >= 0 (including the zero polynomial).
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  // Lowest/highest exponent; both require a non-zero value.
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  /// Degree of a non-zero polynomial (= max_exp).
  std::int64_t degree() const { return max_exp(); }

  mpz_class coeff(std::int64_t exp) const;
  const ExpMap& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  /// a^n for n >= 0; a^0 = 1.
  LaurentPoly pow(unsigned long n) const;

  /// Multiply by t^k.
  LaurentPoly shifted(std::int64_t k) const;

  /// Exact division: returns *this / divisor when the remainder is zero,
  /// std::nullopt otherwise. The divisor's lowest coefficient must be +-1
  /// (true for the 1 - t^2 factor this is used on).
  std::optional<LaurentPoly> div_exact(const LaurentPoly& divisor) const;

  /// Evaluate at t = 1 or t = -1 (well defined for any Laurent exponent).
  mpz_class eval_unit(int t_value) const;

  mpz_class constant_term() const { return coeff(0); }

  /// Coefficients c_0..c_degree of a polynomial (no negative exponents).
  std::vector<mpz_class> coefficients_ascending() const;

  /// Human-readable form, e.g. "1 + 4t + 7t^2" or "t^-2 + t^-4".
  std::string to_string() const;

 private:
  void set_coeff(std::int64_t exp, const mpz_class& c);

  ExpMap terms_;
};

}  // namespace parahiggs

#endif
