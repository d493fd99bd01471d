// Internal builders for the handful of series factors the formulas use.
#ifndef PARAHIGGS_SRC_FACTORS_HPP
#define PARAHIGGS_SRC_FACTORS_HPP

#include "parahiggs/series.hpp"

namespace parahiggs::factors {

inline const LaurentPoly kOne = LaurentPoly::one();

// 1 - x and 1 - y
inline BiPoly one_minus_x() {
  return BiPoly::constant(kOne) + BiPoly::term(1, 0, LaurentPoly(-1));
}
inline BiPoly one_minus_y() {
  return BiPoly::constant(kOne) + BiPoly::term(0, 1, LaurentPoly(-1));
}

// 1 - t^k x and 1 - t^k y (k may be negative)
inline BiPoly one_minus_tk_x(std::int64_t k) {
  return BiPoly::constant(kOne) + BiPoly::term(1, 0, -LaurentPoly::t(k));
}
inline BiPoly one_minus_tk_y(std::int64_t k) {
  return BiPoly::constant(kOne) + BiPoly::term(0, 1, -LaurentPoly::t(k));
}

// t^2 - x
inline BiPoly t2_minus_x() {
  return BiPoly::constant(LaurentPoly::t(2)) + BiPoly::term(1, 0, LaurentPoly(-1));
}

// 1 + t^2 x, 1 + t^2 y, 1 + t^2 xy
inline BiPoly one_plus_t2_x() {
  return BiPoly::constant(kOne) + BiPoly::term(1, 0, LaurentPoly::t(2));
}
inline BiPoly one_plus_t2_y() {
  return BiPoly::constant(kOne) + BiPoly::term(0, 1, LaurentPoly::t(2));
}
inline BiPoly one_plus_t2_xy() {
  return BiPoly::constant(kOne) + BiPoly::term(1, 1, LaurentPoly::t(2));
}

// (1 + tx)^n / (1 + ty)^n
inline BiPoly one_plus_tx_pow(unsigned long n) { return binomial_pow(LaurentPoly::t(1), false, n); }
inline BiPoly one_plus_ty_pow(unsigned long n) { return binomial_pow(LaurentPoly::t(1), true, n); }

// 1 + t^2 as a scalar
inline LaurentPoly one_plus_t2() { return kOne + LaurentPoly::t(2); }

// (1 + t)^n as a scalar
inline LaurentPoly one_plus_t_pow(unsigned long n) {
  return (kOne + LaurentPoly::t(1)).pow(n);
}

}  // namespace parahiggs::factors

#endif
