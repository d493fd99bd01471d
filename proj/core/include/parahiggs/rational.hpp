#ifndef PARAHIGGS_RATIONAL_HPP
#define PARAHIGGS_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace parahiggs {

/// Exact rational number. Weight arithmetic and every chamber comparison
/// go through this type; nothing in the library touches floating point.
/// Canonical form: reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long num) : v_(static_cast<long>(num)) {}
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optionally signed). Throws BadInput on anything else.
  static Rational parse(const std::string& text);

  /// Mirrors the parse format: "p/q" reduced, or "p" when the denominator is 1.
  std::string to_string() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Largest integer <= value (floor also for negatives).
  mpz_class floor() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

}  // namespace parahiggs

#endif
