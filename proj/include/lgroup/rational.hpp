#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lgroup {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(Integer numerator);  // NOLINT(google-explicit-constructor)
  Rational(Integer numerator, Integer denominator);
  Rational(long long numerator) : Rational(Integer(numerator)) {}  // NOLINT
  Rational(int numerator) : Rational(Integer(numerator)) {}        // NOLINT

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Accepts "p/q" or "p"; throws Error(parse_error) otherwise.
  static Rational parse(std::string_view text);

 private:
  Integer num_{0};
  Integer den_{1};
};

const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

}  // namespace lgroup
