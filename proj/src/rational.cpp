#include "daectl/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "daectl/errors.hpp"

namespace daectl {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

void Rational::set_fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text)) {
    throw ParseError("invalid rational \"" + std::string(text) + "\"");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text), mpz_class(1));

  const auto den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text) || den_text.front() == '-') {
    throw ParseError("invalid rational \"" + std::string(text) + "\"");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_integer(num_text), den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
  return Rational(mpq_class(value));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace daectl
