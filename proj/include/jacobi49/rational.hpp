#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "jacobi49/checked.hpp"

namespace jacobi49 {

// Exact rational with 64-bit numerator and denominator, always reduced,
// denominator positive. Overflow throws.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(checked::neg(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Int g = std::gcd(a.den_, b.den_);
    Int n = checked::add(checked::mul(a.num_, b.den_ / g), checked::mul(b.num_, a.den_ / g));
    return Rational(n, checked::mul(a.den_ / g, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = std::gcd(a.num_, b.den_);
    Int g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked::mul(a.num_ / g1, b.num_ / g2), checked::mul(a.den_ / g2, b.den_ / g1));
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  // Residue in Z/7 of a 7-integral rational (denominator prime to 7);
  // nullopt when 7 divides the denominator.
  std::optional<int> mod7() const {
    if (den_ % 7 == 0) return std::nullopt;
    Int inv = 1;
    const Int d = mod(den_, 7);
    while ((d * inv) % 7 != 1) ++inv;
    return static_cast<int>(mod(mod(num_, 7) * inv, 7));
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked::neg(num_);
      den_ = checked::neg(den_);
    }
    Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace jacobi49
