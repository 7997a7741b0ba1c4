#pragma once

#include <array>
#include <string>
#include <vector>

#include "jacobi49/cyclotomic_ring.hpp"
#include "jacobi49/prime_field.hpp"

namespace jacobi49 {

// E x E integer matrix indexed by residues mod E.
template <int E>
class ModTable {
 public:
  ModTable() : cells_(static_cast<std::size_t>(E) * E, 0) {}

  Int& operator()(Int i, Int j) { return cells_[index(i, j)]; }
  Int operator()(Int i, Int j) const { return cells_[index(i, j)]; }

  Int total() const {
    Int s = 0;
    for (Int v : cells_) s = checked::add(s, v);
    return s;
  }

  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> out(E, std::vector<Int>(E));
    for (int i = 0; i < E; ++i)
      for (int j = 0; j < E; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const ModTable&, const ModTable&) = default;

 private:
  static std::size_t index(Int i, Int j) { return static_cast<std::size_t>(mod(i, E) * E + mod(j, E)); }
  std::vector<Int> cells_;
};

// Cyclotomic numbers (i,j)_E of F_p with respect to gamma.
template <int E>
struct CycNumTable {
  Int p = 0;
  Int gamma = 0;
  ModTable<E> counts;

  Int f() const { return (p - 1) / E; }
  Int operator()(Int i, Int j) const { return counts(i, j); }
};

// Dickson-Hurwitz sums B(i,j)_E.
template <int E>
struct DHTable {
  Int p = 0;
  Int gamma = 0;
  ModTable<E> B;

  Int f() const { return (p - 1) / E; }
  Int operator()(Int i, Int j) const { return B(i, j); }
};

// One pass over v in F_p \ {0, -1}.
template <int E>
CycNumTable<E> cyclotomic_numbers(const FieldCtx& ctx) {
  ctx.cofactor(E);
  CycNumTable<E> t{ctx.p(), ctx.gamma(), {}};
  for (Int v = 1; v <= ctx.p() - 2; ++v) ++t.counts(ctx.ind(v) % E, ctx.ind(v + 1) % E);
  return t;
}

// chi^i(-1) = zeta^(i * ind(-1)).
template <int E>
CycInt<E> chi_power_at_minus_one(const FieldCtx& ctx, Int i) {
  return CycInt<E>::monomial(checked::mul(mod(i, E), ctx.ind(ctx.p() - 1) % E));
}

// sum over v of chi^i(v) chi^j(1 + sign*v) with chi^k(0) = 0 for every k,
// including k = 0. Every Jacobi sum in the library goes through here.
template <int E>
CycInt<E> character_pair_sum(const FieldCtx& ctx, Int i, Int j, int sign) {
  ctx.cofactor(E);
  const Int p = ctx.p();
  const Int a = mod(i, E), b = mod(j, E);
  std::array<Int, E> acc{};
  for (Int v = 1; v <= p - 1; ++v) {
    const Int w = sign > 0 ? v + 1 : 1 - v + p;  // 1 + v or 1 - v, in [1, p]
    const Int wr = w == p ? 0 : w;
    if (wr == 0) continue;  // chi^j(0) = 0
    acc[(a * ctx.ind(v) + b * ctx.ind(wr)) % E] += 1;
  }
  return CycInt<E>::from_coeffs(acc).canonical();
}

// J(i,j)_E = sum_v chi^i(v) chi^j(1+v).
template <int E>
CycInt<E> jacobi_sum(const FieldCtx& ctx, Int i, Int j) {
  return character_pair_sum<E>(ctx, i, j, +1);
}

// J(chi^i, chi^j)_E = sum_v chi^i(v) chi^j(1-v).
template <int E>
CycInt<E> jacobi_sum_variant(const FieldCtx& ctx, Int i, Int j) {
  return character_pair_sum<E>(ctx, i, j, -1);
}

// sum_{i,j} (i,j) zeta^(a i + b j).
template <int E>
CycInt<E> jacobi_from_cyc(const CycNumTable<E>& cyc, Int a, Int b) {
  CycInt<E> r;
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) {
      const Int c = cyc(i, j);
      if (c != 0) r.add_term(mod(a, E) * i + mod(b, E) * j, c);
    }
  return r.canonical();
}

template <int E>
using JacobiMatrix = std::vector<CycInt<E>>;  // row-major E x E

template <int E>
JacobiMatrix<E> all_jacobi_sums(const FieldCtx& ctx) {
  JacobiMatrix<E> out;
  out.reserve(static_cast<std::size_t>(E) * E);
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) out.push_back(jacobi_sum<E>(ctx, i, j));
  return out;
}

template <int E>
JacobiMatrix<E> all_jacobi_from_cyc(const CycNumTable<E>& cyc) {
  JacobiMatrix<E> out;
  out.reserve(static_cast<std::size_t>(E) * E);
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) out.push_back(jacobi_from_cyc<E>(cyc, i, j));
  return out;
}

// Inverse transform: sum_{i,j} zeta^-(a i + b j) J(i,j) must be E^2 (a,b).
template <int E>
Int cyc_from_jacobi(const JacobiMatrix<E>& all_j, Int a, Int b) {
  if (all_j.size() != static_cast<std::size_t>(E) * E)
    throw InputError("Jacobi matrix must hold E*E entries");
  CycInt<E> acc;
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) {
      const Int shift = -(mod(a, E) * i + mod(b, E) * j);
      acc += all_j[static_cast<std::size_t>(i * E + j)].times_zeta_power(shift);
    }
  const auto value = acc.as_integer();
  if (!value) throw IdentityViolation("Fourier inverse is not a rational integer");
  if (*value % (E * E) != 0)
    throw IdentityViolation("Fourier inverse " + std::to_string(*value) + " not divisible by E^2");
  return *value / (E * E);
}

// B(i,j) = sum_h (h, i - j h).
template <int E>
DHTable<E> dickson_hurwitz(const CycNumTable<E>& cyc) {
  DHTable<E> dh{cyc.p, cyc.gamma, {}};
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j) {
      Int s = 0;
      for (int h = 0; h < E; ++h) s += cyc(h, i - j * h);
      dh.B(i, j) = s;
    }
  return dh;
}

// J(1,j) = sum_i B(i,j) zeta^i, valid when f is even.
template <int E>
CycInt<E> jacobi_via_dh(const DHTable<E>& dh, Int j) {
  if (dh.f() % 2 != 0) throw UnsupportedCase("jacobi_via_dh requires f = (p-1)/E even");
  CycInt<E> r;
  for (int i = 0; i < E; ++i) r.add_term(i, dh(i, j));
  return r.canonical();
}

// The six index pairs forced equal to (i,j) when f is even.
template <int E>
std::array<std::pair<Int, Int>, 6> six_fold_class(Int i, Int j) {
  auto m = [](Int v) { return mod(v, E); };
  return {{{m(i), m(j)}, {m(j), m(i)}, {m(i - j), m(-j)}, {m(j - i), m(-i)}, {m(-i), m(j - i)}, {m(-j), m(i - j)}}};
}

template <int E>
bool has_six_fold_symmetry(const CycNumTable<E>& cyc) {
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j)
      for (auto [a, b] : six_fold_class<E>(i, j))
        if (cyc(a, b) != cyc(i, j)) return false;
  return true;
}

// Checks of the DH identities: B(i,j) = B(i,-j-i), the j = 0 column, and
// the column sums p - 2.
template <int E>
struct DHIdentityReport {
  bool reflection = true;
  bool zero_column = true;
  bool column_sums = true;
  bool all() const { return reflection && zero_column && column_sums; }
};

template <int E>
DHIdentityReport<E> check_dh_identities(const DHTable<E>& dh) {
  DHIdentityReport<E> r;
  const Int f = dh.f();
  for (int i = 0; i < E; ++i) {
    if (dh(i, 0) != (i == 0 ? f - 1 : f)) r.zero_column = false;
    for (int j = 0; j < E; ++j)
      if (dh(i, j) != dh(i, E - 1 - j)) r.reflection = false;
  }
  for (int j = 0; j < E; ++j) {
    Int s = 0;
    for (int i = 0; i < E; ++i) s += dh(i, j);
    if (s != dh.p - 2) r.column_sums = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Elementary Jacobi sum properties, checked exactly on a list of pairs.

struct JacobiPropertyReport {
  int pairs_checked = 0;
  int modulus_checks = 0;
  int failures = 0;
  std::vector<std::string> notes;
  bool ok() const { return failures == 0; }
};

template <int E>
void check_jacobi_properties_for_pair(const FieldCtx& ctx, Int i, Int j, bool check_modulus, JacobiPropertyReport& rep) {
  auto fail = [&](const std::string& what) {
    ++rep.failures;
    if (rep.notes.size() < 16)
      rep.notes.push_back(what + " at p=" + std::to_string(ctx.p()) + " e=" + std::to_string(E) + " (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  };
  const Int a = mod(i, E), b = mod(j, E);
  const Int p = ctx.p();
  const auto jv = jacobi_sum_variant<E>(ctx, a, b);
  const auto chi_i_m1 = chi_power_at_minus_one<E>(ctx, a);
  ++rep.pairs_checked;

  if (jacobi_sum<E>(ctx, a, b) != chi_i_m1 * jv) fail("J(i,j) != chi^i(-1) J(chi^i,chi^j)");
  if (a == 0 && b == 0 && jv != CycInt<E>::constant(p - 2)) fail("property 1");
  if ((a == 0) != (b == 0) && jv != CycInt<E>::constant(-1)) fail("property 2");
  if (a != 0 && mod(a + b, E) == 0 && jv != -chi_i_m1) fail("property 3");
  if (jv != jacobi_sum_variant<E>(ctx, b, a)) fail("property 4 symmetry");
  if (jv != chi_i_m1 * jacobi_sum_variant<E>(ctx, -a - b, a)) fail("property 4 reflection");
  if (check_modulus && a != 0 && b != 0 && mod(a + b, E) != 0) {
    ++rep.modulus_checks;
    const auto norm = jv * apply_automorphism<E>(jv, -1);
    if (norm != CycInt<E>::constant(p)) fail("property 5 |J|^2 = p");
  }
}

// With f even, J(i,i) = J(-2i,i) = J(i,-2i).
template <int E>
bool check_diagonal_equalities(const FieldCtx& ctx, Int i) {
  const auto base = jacobi_sum<E>(ctx, i, i);
  return base == jacobi_sum<E>(ctx, -2 * i, i) && base == jacobi_sum<E>(ctx, i, -2 * i);
}

}  // namespace jacobi49
