#include "stomap/scalar.hpp"

#include <ostream>

#include "stomap/error.hpp"

namespace stomap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(std::uint64_t value) : value_(mpz_class(std::to_string(value))) {}

Scalar::Scalar(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)),
                     mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw DomainError("negative scalar " + value_.get_str());
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("malformed fraction '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::complement() const { return Scalar::one() - *this; }

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& other) {
  value_ += other.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (other.value_ > value_) {
    throw DomainError("subtraction " + to_string() + " - " + other.to_string() +
                      " leaves the non-negative rationals");
  }
  value_ -= other.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  value_ *= other.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace stomap
