#pragma once

// Septic artiad and hyperartiad primes. A prime p = 14s + 1 is artiad when
// every root of x^3 + x^2 - 2x - 1 mod p is a seventh power residue, and
// hyperartiad when in addition 7 is a seventh power residue.

#include <optional>
#include <string>
#include <vector>

#include "jacobi49/congruence49.hpp"

namespace jacobi49 {

enum class PrimeKind { ordinary, artiad, hyperartiad };

inline const char* to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::ordinary: return "ordinary";
    case PrimeKind::artiad: return "artiad";
    case PrimeKind::hyperartiad: return "hyperartiad";
  }
  return "?";
}

inline bool classify_via_x(const LWSolution& s) { return mod(s[2], 7) == 0 && mod(s[3], 7) == 0 && mod(s[4], 7) == 0; }

inline std::vector<Int> cubic_roots(Int p) {
  std::vector<Int> roots;
  const auto up = static_cast<std::uint64_t>(p);
  for (Int x = 0; x < p; ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    const std::uint64_t x2 = mulmod(ux, ux, up);
    const std::uint64_t x3 = mulmod(x2, ux, up);
    // x^3 + x^2 - 2x - 1 (mod p)
    const std::uint64_t v = (x3 + x2 + 2 * (up - ux % up) + (up - 1)) % up;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

inline bool classify_via_cubic(const FieldCtx& ctx) {
  if (mod(ctx.p(), 7) != 1) throw InputError(std::to_string(ctx.p()) + " is not 1 mod 7");
  const auto roots = cubic_roots(ctx.p());
  if (roots.size() != 3)
    throw InvariantViolation("x^3 + x^2 - 2x - 1 has " + std::to_string(roots.size()) + " roots mod " +
                             std::to_string(ctx.p()));
  for (Int r : roots)
    if (ctx.index_of(r) % 7 != 0) return false;
  return true;
}

// ind_gamma(7) mod 7 = (p-1)/2 - sum_h h (h,0)_7.
inline int ind7_formula(const CycNumTable<7>& cyc7, Int p) {
  if (cyc7.f() % 2 != 0) throw UnsupportedCase("index formula requires f even");
  Int s = (p - 1) / 2;
  for (int h = 0; h < 7; ++h) s -= h * cyc7(h, 0);
  return static_cast<int>(mod(s, 7));
}

// 28 ind_gamma(7) = x2 - 19x3 - 18x4 (mod 49).
inline bool ind7_mod49_relation(const LWSolution& s, const FieldCtx& ctx) {
  return mod(28 * ctx.index_of(7) - (s[2] - 19 * s[3] - 18 * s[4]), 49) == 0;
}

struct CoefficientConditions {
  bool low_coeffs_vanish = false;  // c_{1..5,1} = 0 (mod 7)
  bool c6_condition = false;       // 12 c6 = (4/7)(6p - x1 - 12)/2 (mod 7)
  bool c7_condition = false;       // 4 c7 - 4 ind7 = -12 c6 + x5 (mod 7)
  bool c7_condition_without_ind = false;  // 4 c7 = -12 c6 + x5 (mod 7)

  bool artiad_criterion() const { return low_coeffs_vanish && c6_condition && c7_condition; }
  bool hyperartiad_criterion() const { return low_coeffs_vanish && c6_condition && c7_condition_without_ind; }
};

// `coeffs` holds c_{1..6,1} and S(1); ind7 is the full integer index of 7.
inline CoefficientConditions coefficient_conditions(const CoeffSet& coeffs, const LWSolution& s, Int ind7, Int p) {
  if (coeffs.n != 1) throw InputError("coefficient conditions concern n = 1");
  // (4/7) * (6p - x1 - 12)/2 = (12p - 2x1 - 24)/7; 7 | (6p - x1 - 12) because x1 = p = 1 (mod 7).
  const Int four_sevenths = exact_div(12 * p - 2 * s[1] - 24, 7, "(4/7)(6p - x1 - 12)/2");
  CoefficientConditions r;
  r.low_coeffs_vanish = true;
  for (int i = 1; i <= 5; ++i) r.low_coeffs_vanish = r.low_coeffs_vanish && mod(coeffs.c[i], 7) == 0;
  r.c6_condition = mod(12 * coeffs.c[6] - four_sevenths, 7) == 0;
  r.c7_condition = mod(4 * coeffs.s_value - 4 * ind7 - (-12 * coeffs.c[6] + s[5]), 7) == 0;
  r.c7_condition_without_ind = mod(4 * coeffs.s_value - (-12 * coeffs.c[6] + s[5]), 7) == 0;
  return r;
}

// -1 + c6 t^6 + (-3 c6 + k * ind7 + 2 x5) t^7.
inline Residue8 simplified_residue(Int c6, Int ind7_coefficient, Int ind7, Int x5) {
  return Residue8::from_ints({-1, 0, 0, 0, 0, 0, c6, -3 * c6 + ind7_coefficient * ind7 + 2 * x5});
}

struct SimplifiedCongruence {
  Residue8 actual;
  Residue8 artiad_form;       // with ind7
  Residue8 hyperartiad_form;  // ind7 dropped
  Residue8 rescaled_form;     // 3 ind7 in place of ind7 (observed t^7 law)
  bool artiad_form_matches = false;
  bool hyperartiad_form_matches = false;
  bool rescaled_form_matches = false;
  bool low_terms_vanish = false;  // t^1..t^5 coefficients of the actual residue are zero
  bool any_low_coeff_nonzero = false;  // some c_{i,1} (3 <= i <= 5) nonzero mod 7
  // For artiad p the artiad form must match; for ordinary p with a nonzero
  // c_{3..5,1} it must not.
  bool holds = false;
};

inline SimplifiedCongruence check_simplified_congruence(const CongruenceCert& cert, bool artiad, bool hyperartiad, const LWSolution& s,
                                     Int ind7) {
  if (cert.n != 1) throw InputError("the simplified congruence concerns J(1,1)_49");
  SimplifiedCongruence r;
  r.actual = cert.actual;
  const Int c6 = cert.coeffs.c[6];
  r.artiad_form = simplified_residue(c6, 1, ind7, s[5]);
  r.hyperartiad_form = simplified_residue(c6, 0, ind7, s[5]);
  r.rescaled_form = simplified_residue(c6, 3, ind7, s[5]);
  r.artiad_form_matches = r.artiad_form == r.actual;
  r.hyperartiad_form_matches = r.hyperartiad_form == r.actual;
  r.rescaled_form_matches = r.rescaled_form == r.actual;
  r.low_terms_vanish = true;
  for (int i = 1; i <= 5; ++i) r.low_terms_vanish = r.low_terms_vanish && r.actual[i] == 0;
  for (int i = 3; i <= 5; ++i) r.any_low_coeff_nonzero = r.any_low_coeff_nonzero || mod(cert.coeffs.c[i], 7) != 0;
  if (artiad) {
    r.holds = r.artiad_form_matches && (!hyperartiad || r.hyperartiad_form_matches);
  } else {
    r.holds = !r.any_low_coeff_nonzero || (!r.artiad_form_matches && !r.hyperartiad_form_matches);
  }
  return r;
}

struct Classification {
  Int p = 0;
  Int gamma = 0;
  PrimeKind kind = PrimeKind::ordinary;
  bool via_x = false;
  bool via_cubic = false;
  bool ind7_zero = false;
  Int ind7 = 0;
  int ind7_formula_value = 0;
  bool index_formula_ok = false;
  bool mod49_relation = false;
  LWSolution lw;
  // Present only for p = 1 (mod 49).
  std::optional<CoefficientConditions> conditions;
  std::optional<bool> artiad_criterion_agrees;
  std::optional<bool> hyperartiad_criterion_agrees;
  std::optional<SimplifiedCongruence> simplified;

  bool classifiers_agree() const { return via_x == via_cubic; }
};

inline void require_classifiable_prime(Int p) {
  require_odd_prime(p);
  if (mod(p, 14) != 1) throw InputError(std::to_string(p) + " is not 1 mod 14");
}

// `verification` may carry an already computed run for n = 1; when p = 1
// (mod 49) and it is absent, one is computed here.
inline Classification classify(const FieldCtx& ctx, const PrimeVerification* verification = nullptr) {
  const Int p = ctx.p();
  require_classifiable_prime(p);
  Classification c;
  c.p = p;
  c.gamma = ctx.gamma();
  const auto cyc7 = cyclotomic_numbers<7>(ctx);
  c.lw = lw_from_tables(dickson_hurwitz(cyc7));
  c.via_x = classify_via_x(c.lw);
  c.via_cubic = classify_via_cubic(ctx);
  c.ind7 = ctx.index_of(7);
  c.ind7_zero = c.ind7 % 7 == 0;
  c.ind7_formula_value = ind7_formula(cyc7, p);
  c.index_formula_ok = c.ind7_formula_value == c.ind7 % 7;
  c.mod49_relation = ind7_mod49_relation(c.lw, ctx);
  c.kind = !c.via_x ? PrimeKind::ordinary : (c.ind7_zero ? PrimeKind::hyperartiad : PrimeKind::artiad);

  if (mod(p, 49) == 1) {
    std::optional<PrimeVerification> local;
    const PrimeVerification* pv = verification;
    const auto has_n1 = [](const PrimeVerification* v) {
      if (!v) return false;
      for (const auto& cert : v->certs)
        if (cert.n == 1) return true;
      return false;
    };
    if (!has_n1(pv)) {
      local = verify_prime(ctx, VerifyOptions{{1}, false});
      pv = &*local;
    }
    const CongruenceCert* cert1 = nullptr;
    for (const auto& cert : pv->certs)
      if (cert.n == 1) cert1 = &cert;
    const auto cond = coefficient_conditions(cert1->coeffs, c.lw, c.ind7, p);
    c.conditions = cond;
    const bool artiad = c.kind != PrimeKind::ordinary;
    const bool hyper = c.kind == PrimeKind::hyperartiad;
    c.artiad_criterion_agrees = cond.artiad_criterion() == artiad;
    c.hyperartiad_criterion_agrees = cond.hyperartiad_criterion() == hyper;
    c.simplified = check_simplified_congruence(*cert1, artiad, hyper, c.lw, c.ind7);
  }
  return c;
}

inline Classification classify(Int p, std::optional<Int> gamma = std::nullopt) {
  require_classifiable_prime(p);
  const FieldCtx ctx = gamma ? FieldCtx(p, *gamma) : FieldCtx(p);
  return classify(ctx);
}

}  // namespace jacobi49
