#include "parahiggs/rational.hpp"

#include <cctype>

#include "parahiggs/errors.hpp"

namespace parahiggs {

Rational::Rational(long long num, long long den)
    : v_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw BadInput("rational with zero denominator");
  v_.canonicalize();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw BadInput("not a rational: '" + text + "'");
    return Rational(mpq_class(mpz_class(text), 1));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw BadInput("not a rational: '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw BadInput("zero denominator: '" + text + "'");
  return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

}  // namespace parahiggs
