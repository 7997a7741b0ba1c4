#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "jacobi49/checked.hpp"

namespace jacobi49 {

namespace detail {

constexpr int smallest_prime_factor(int n) {
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

constexpr bool is_prime_power(int n) {
  const int q = smallest_prime_factor(n);
  while (n % q == 0) n /= q;
  return n == 1;
}

}  // namespace detail

// Element of Z[zeta_E], E a prime power, stored as E coefficients of
// 1, zeta, ..., zeta^(E-1). The representation is redundant; canonical()
// rewrites it on the power basis 1, ..., zeta^(phi(E)-1).
template <int E>
class CycInt {
  static_assert(E >= 3 && detail::is_prime_power(E), "order must be an odd prime power");

 public:
  static constexpr int kOrder = E;
  static constexpr int kPrime = detail::smallest_prime_factor(E);
  static constexpr int kPhi = E / kPrime * (kPrime - 1);

  constexpr CycInt() { coeffs_.fill(0); }

  static CycInt constant(Int c) {
    CycInt r;
    r.coeffs_[0] = c;
    return r;
  }

  static CycInt monomial(Int k, Int c = 1) {
    CycInt r;
    r.coeffs_[static_cast<std::size_t>(mod(k, E))] = c;
    return r;
  }

  static CycInt from_coeffs(const std::array<Int, E>& c) {
    CycInt r;
    r.coeffs_ = c;
    return r;
  }

  const std::array<Int, E>& coeffs() const { return coeffs_; }
  Int coeff(int k) const { return coeffs_[static_cast<std::size_t>(mod(k, E))]; }

  // Accumulate c * zeta^k without canonicalizing.
  void add_term(Int k, Int c = 1) {
    auto& slot = coeffs_[static_cast<std::size_t>(mod(k, E))];
    slot = checked::add(slot, c);
  }

  // Rewrites zeta^k for k >= phi(E) using Phi_E(zeta) = 0. Idempotent.
  CycInt canonical() const {
    constexpr int block = E / kPrime;
    CycInt r = *this;
    for (int k = E - 1; k >= kPhi; --k) {
      const Int c = r.coeffs_[k];
      if (c == 0) continue;
      r.coeffs_[k] = 0;
      // zeta^k = -sum_{m=0}^{kPrime-2} zeta^(k - (kPrime-1-m)*block)
      const int rbase = k - kPhi;
      for (int m = 0; m < kPrime - 1; ++m) {
        auto& slot = r.coeffs_[rbase + m * block];
        slot = checked::sub(slot, c);
      }
    }
    return r;
  }

  bool is_canonical() const {
    for (int k = kPhi; k < E; ++k)
      if (coeffs_[k] != 0) return false;
    return true;
  }

  bool is_zero() const {
    const CycInt c = canonical();
    for (Int v : c.coeffs_)
      if (v != 0) return false;
    return true;
  }

  // The rational integer this element equals, if it is one.
  std::optional<Int> as_integer() const {
    const CycInt c = canonical();
    for (int k = 1; k < E; ++k)
      if (c.coeffs_[k] != 0) return std::nullopt;
    return c.coeffs_[0];
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt r;
    for (int k = 0; k < E; ++k) r.coeffs_[k] = checked::add(a.coeffs_[k], b.coeffs_[k]);
    return r;
  }

  friend CycInt operator-(const CycInt& a) {
    CycInt r;
    for (int k = 0; k < E; ++k) r.coeffs_[k] = checked::neg(a.coeffs_[k]);
    return r;
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    CycInt r;
    for (int i = 0; i < E; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < E; ++j) {
        if (b.coeffs_[j] == 0) continue;
        checked::fma_into(r.coeffs_[(i + j) % E], a.coeffs_[i], b.coeffs_[j]);
      }
    }
    return r.canonical();
  }

  friend CycInt operator*(Int s, const CycInt& a) {
    CycInt r;
    for (int k = 0; k < E; ++k) r.coeffs_[k] = checked::mul(s, a.coeffs_[k]);
    return r;
  }

  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }

  // Multiplication by zeta^k: a rotation of the redundant vector.
  CycInt times_zeta_power(Int k) const {
    CycInt r;
    const Int shift = mod(k, E);
    for (int i = 0; i < E; ++i) r.coeffs_[(i + shift) % E] = coeffs_[i];
    return r;
  }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.canonical().coeffs_ == b.canonical().coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycInt& a) {
    const CycInt c = a.canonical();
    bool first = true;
    for (int k = 0; k < E; ++k) {
      if (c.coeffs_[k] == 0) continue;
      if (!first) os << (c.coeffs_[k] < 0 ? " - " : " + ");
      else if (c.coeffs_[k] < 0) os << "-";
      const Int mag = c.coeffs_[k] < 0 ? -c.coeffs_[k] : c.coeffs_[k];
      if (k == 0) os << mag;
      else {
        if (mag != 1) os << mag << "*";
        os << "z^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    return os;
  }

 private:
  std::array<Int, E> coeffs_;
};

// The E-th cyclotomic polynomial evaluated at zeta (zero in the ring).
template <int E>
CycInt<E> cyclotomic_relation() {
  CycInt<E> r;
  for (int m = 0; m < CycInt<E>::kPrime; ++m) r.add_term(m * (E / CycInt<E>::kPrime));
  return r;
}

// sigma_s: zeta -> zeta^s, s prime to E.
template <int E>
CycInt<E> apply_automorphism(const CycInt<E>& a, Int s) {
  if (std::gcd(mod(s, E), static_cast<Int>(E)) != 1)
    throw InputError("automorphism exponent " + std::to_string(s) + " not prime to " + std::to_string(E));
  CycInt<E> r;
  for (int k = 0; k < E; ++k) r.add_term(mod(checked::mul(s, k), E), a.coeffs()[k]);
  return r.canonical();
}

// ---------------------------------------------------------------------------
// Reduction Z[zeta_49] -> F_7[t]/(t^8), zeta -> 1 + t.
//
// Well defined because Phi_49(1+t) = t^42 (mod 7) and 7 lies in (1-zeta)^42,
// so (1-zeta)^8 corresponds to (t^8) and the coefficients live in F_7.

inline constexpr int kResidueLength = 8;
inline constexpr int kValuationCap = 42;

struct Residue8 {
  std::array<std::uint8_t, kResidueLength> c{};

  std::uint8_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  static Residue8 from_ints(const std::array<Int, kResidueLength>& v) {
    Residue8 r;
    for (int i = 0; i < kResidueLength; ++i) r.c[i] = static_cast<std::uint8_t>(mod(v[i], 7));
    return r;
  }

  friend Residue8 operator+(const Residue8& a, const Residue8& b) {
    Residue8 r;
    for (int i = 0; i < kResidueLength; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % 7);
    return r;
  }

  friend Residue8 operator*(const Residue8& a, const Residue8& b) {
    Residue8 r;
    for (int i = 0; i < kResidueLength; ++i)
      for (int j = 0; i + j < kResidueLength; ++j)
        r.c[i + j] = static_cast<std::uint8_t>((r.c[i + j] + a.c[i] * b.c[j]) % 7);
    return r;
  }

  friend bool operator==(const Residue8&, const Residue8&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Residue8& r) {
    os << "(";
    for (int i = 0; i < kResidueLength; ++i) os << (i ? "," : "") << int(r.c[i]);
    return os << ")";
  }
};

// Binomial coefficients C(k, m) mod 7 for 0 <= k < 49, 0 <= m <= 42: the
// images of zeta^k in F_7[t]/(t^43). Held as a value so the self-test can
// inject faults into a copy.
class ReductionTable {
 public:
  static constexpr int kRows = 49;
  static constexpr int kCols = kValuationCap + 1;

  static const ReductionTable& standard() {
    static const ReductionTable table = [] {
      ReductionTable t;
      for (int k = 0; k < kRows; ++k) {
        t.entry_[k][0] = 1;
        for (int m = 1; m < kCols; ++m)
          t.entry_[k][m] = k == 0 ? 0 : static_cast<std::uint8_t>((t.entry_[k - 1][m] + t.entry_[k - 1][m - 1]) % 7);
      }
      return t;
    }();
    return table;
  }

  std::uint8_t at(int k, int m) const { return entry_[k][m]; }
  void set(int k, int m, std::uint8_t v) { entry_[k][m] = v; }

  // Image of a in F_7[t]/(t^len), len <= kCols.
  std::array<std::uint8_t, kCols> image(const CycInt<49>& a, int len) const {
    std::array<std::uint8_t, kCols> out{};
    for (int k = 0; k < kRows; ++k) {
      const Int ak = mod(a.coeffs()[k], 7);
      if (ak == 0) continue;
      for (int m = 0; m < len && m <= k; ++m)
        out[m] = static_cast<std::uint8_t>((out[m] + ak * entry_[k][m]) % 7);
    }
    return out;
  }

  Residue8 residue(const CycInt<49>& a) const {
    const auto img = image(a, kResidueLength);
    Residue8 r;
    for (int i = 0; i < kResidueLength; ++i) r.c[i] = img[i];
    return r;
  }

 private:
  std::array<std::array<std::uint8_t, kCols>, kRows> entry_{};
};

inline Residue8 residue_mod_t8(const CycInt<49>& a) { return ReductionTable::standard().residue(a); }

// (1-zeta)-adic valuation, capped at 42 (reported as 42 meaning ">= 42").
// nullopt stands for the zero element (infinite valuation).
inline std::optional<int> valuation(const CycInt<49>& a) {
  if (a.is_zero()) return std::nullopt;
  const auto img = ReductionTable::standard().image(a, kValuationCap);
  for (int m = 0; m < kValuationCap; ++m)
    if (img[m] != 0) return m;
  return kValuationCap;
}

// Coefficients of Phi_49(1+t) mod 7, degree 42, from the given table.
inline std::array<std::uint8_t, ReductionTable::kCols> phi49_shifted_mod7(const ReductionTable& table) {
  return table.image(cyclotomic_relation<49>(), ReductionTable::kCols);
}

}  // namespace jacobi49
