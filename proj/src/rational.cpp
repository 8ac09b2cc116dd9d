#include "paracurv/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "paracurv/errors.hpp"

namespace paracurv {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (sgn(den) == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) throw ParseError("invalid rational literal: '" + text + "'");
    return Rational(mpz_class(text), mpz_class(1));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-') {
    throw ParseError("invalid rational literal: '" + text + "'");
  }
  mpz_class d(den);
  if (sgn(d) == 0) throw ParseError("invalid rational literal (zero denominator): '" + text + "'");
  return Rational(mpz_class(num), d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace paracurv
