#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stomap {

/// Exact non-negative rational number.
///
/// Always kept in lowest terms with a positive denominator. Arithmetic that
/// would leave the non-negative rationals (subtracting a larger value,
/// dividing by zero) throws DomainError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::uint64_t numerator, std::uint64_t denominator);
  explicit Scalar(mpq_class value);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  /// Parses "p" or "p/q" with decimal non-negative integers.
  static Scalar parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  /// True iff 0 <= value <= 1.
  bool is_probability() const noexcept { return value_ <= 1; }

  /// 1 - value; requires value <= 1.
  Scalar complement() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace stomap
