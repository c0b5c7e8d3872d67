#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "a1h/errors.hpp"

namespace a1h {

/// Exact rational number. Always canonical: positive denominator, numerator
/// and denominator coprime.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) {
    if (den == 0) throw DomainError("zero denominator in rational literal");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Scalar(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Parses "123" or "123/456" (no sign, no spaces).
  static Scalar from_digits(std::string_view num, std::string_view den = "1") {
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in rational literal");
    return Scalar(mpq_class(n, d));
  }

  const mpq_class& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  int sign() const noexcept { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar inverse() const {
    if (is_zero()) throw DomainError("division by zero scalar");
    return Scalar(mpq_class(1 / v_));
  }

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero scalar");
    v_ /= o.v_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "-3/4", "5", "0".
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_{0};
};

}  // namespace a1h
