#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace daectl {

/// Exact rational scalar backed by GMP.
///
/// Always canonical: the denominator is positive and coprime to the
/// numerator. Serializes as "num/den", with "/den" omitted when den = 1.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    set_fraction(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  }

  Rational(const mpz_class& num, const mpz_class& den) { set_fraction(num, den); }

  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" with decimal integers. Throws ParseError.
  static Rational parse(std::string_view text);

  /// Exact conversion of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  std::string str() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  const mpq_class& value() const { return value_; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void set_fraction(const mpz_class& num, const mpz_class& den);

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace daectl
