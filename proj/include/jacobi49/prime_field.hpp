#pragma once

#include <cstdint>
#include <new>
#include <string>
#include <vector>

#include "jacobi49/checked.hpp"

namespace jacobi49 {

// Largest prime for which a full index table is built (4 bytes per entry).
inline constexpr Int kMaxTablePrime = 200'000'000;

// Deterministic Miller-Rabin; the base set is exact for all n < 3.3e24.
inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, un);
    if (x == 1 || x == un - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, un);
      if (x == un - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<Int> distinct_prime_factors(Int n) {
  std::vector<Int> out;
  for (Int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline void require_odd_prime(Int p) {
  if (p < 3 || !is_prime(p)) throw InputError(std::to_string(p) + " is not an odd prime");
}

inline bool is_primitive_root(Int g, Int p) {
  if (g % p == 0) return false;
  for (Int q : distinct_prime_factors(p - 1)) {
    if (powmod(mod(g, p), (p - 1) / q, p) == 1) return false;
  }
  return true;
}

// Smallest primitive root modulo an odd prime.
inline Int find_generator(Int p) {
  require_odd_prime(p);
  const auto factors = distinct_prime_factors(p - 1);
  for (Int g = 2; g < p; ++g) {
    bool ok = true;
    for (Int q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InvariantViolation("no primitive root found for " + std::to_string(p));
}

// The next primitive root strictly above `after`.
inline Int next_generator(Int p, Int after) {
  require_odd_prime(p);
  for (Int g = after + 1; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  throw InputError("no primitive root above " + std::to_string(after) + " mod " + std::to_string(p));
}

// Prime field F_p with a fixed primitive root and its full index table.
// Immutable after construction.
class FieldCtx {
 public:
  FieldCtx(Int p, Int gamma) : p_(p), gamma_(gamma) {
    require_odd_prime(p);
    if (p > kMaxTablePrime)
      throw InputError("prime " + std::to_string(p) + " exceeds index table capacity");
    if (gamma < 2 || gamma > p - 1)
      throw InputError("generator must lie in [2, p-1]");
    try {
      ind_.assign(static_cast<std::size_t>(p), kUnset);
    } catch (const std::bad_alloc&) {
      throw InputError("cannot allocate index table for p = " + std::to_string(p));
    }
    std::uint64_t x = 1;
    for (Int k = 0; k < p - 1; ++k) {
      if (ind_[x] != kUnset)
        throw InputError(std::to_string(gamma) + " is not a primitive root mod " + std::to_string(p));
      ind_[x] = static_cast<std::uint32_t>(k);
      x = mulmod(x, static_cast<std::uint64_t>(gamma), static_cast<std::uint64_t>(p));
    }
  }

  explicit FieldCtx(Int p) : FieldCtx(p, find_generator(p)) {}

  Int p() const { return p_; }
  Int gamma() const { return gamma_; }

  // ind_gamma(a) in [0, p-2]; a must be nonzero mod p.
  Int index_of(Int a) const {
    const Int r = mod(a, p_);
    if (r == 0) throw DomainError("index of 0 is undefined");
    return ind_[static_cast<std::size_t>(r)];
  }

  // Unchecked access for hot loops; a in [1, p-1].
  Int ind(Int a) const { return ind_[static_cast<std::size_t>(a)]; }

  bool divides_order(Int e) const { return e > 0 && (p_ - 1) % e == 0; }

  // f = (p-1)/e.
  Int cofactor(Int e) const {
    if (!divides_order(e))
      throw InputError(std::to_string(e) + " does not divide p-1 for p = " + std::to_string(p_));
    return (p_ - 1) / e;
  }

  bool is_seventh_power_residue(Int a) const {
    if (!divides_order(7)) throw InputError("7 does not divide p-1 for p = " + std::to_string(p_));
    return index_of(a) % 7 == 0;
  }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  Int p_;
  Int gamma_;
  std::vector<std::uint32_t> ind_;
};

inline Int index_of(const FieldCtx& ctx, Int a) { return ctx.index_of(a); }

inline bool is_seventh_power_residue(const FieldCtx& ctx, Int a) {
  return ctx.is_seventh_power_residue(a);
}

inline FieldCtx build_ctx(Int p, Int gamma) { return FieldCtx(p, gamma); }

}  // namespace jacobi49
