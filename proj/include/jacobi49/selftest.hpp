#pragma once

#include <random>
#include <string>
#include <vector>

#include "jacobi49/congruence49.hpp"

namespace jacobi49 {

struct SelfTestReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool ok() const {
    for (const auto& [name, pass] : checks)
      if (!pass) return false;
    return true;
  }
};

inline CycInt<49> random_element(std::mt19937_64& rng, Int bound) {
  std::uniform_int_distribution<Int> dist(-bound, bound);
  std::array<Int, 49> c{};
  for (auto& v : c) v = dist(rng);
  return CycInt<49>::from_coeffs(c);
}

// Startup algebra checks. The reduction table is a parameter so tests can
// run the same checks against a corrupted copy.
inline SelfTestReport run_selftest(const ReductionTable& table = ReductionTable::standard(), int samples = 100) {
  SelfTestReport rep;

  const auto phi = phi49_shifted_mod7(table);
  bool phi_ok = phi[kValuationCap] == 1;
  for (int m = 0; m < kValuationCap; ++m) phi_ok = phi_ok && phi[m] == 0;
  rep.checks.emplace_back("Phi_49(1+t) = t^42 (mod 7)", phi_ok);

  rep.checks.emplace_back("residue(7) = 0", table.residue(CycInt<49>::constant(7)) == Residue8{});
  rep.checks.emplace_back("residue(Phi_49(zeta)) = 0", table.residue(cyclotomic_relation<49>()) == Residue8{});
  const Residue8 zeta_image = Residue8::from_ints({1, 1, 0, 0, 0, 0, 0, 0});
  rep.checks.emplace_back("residue(zeta) = 1 + t", table.residue(CycInt<49>::monomial(1)) == zeta_image);

  std::mt19937_64 rng(0x4a61636f6269ULL);
  bool hom_mul = true, hom_add = true;
  for (int s = 0; s < samples; ++s) {
    const auto a = random_element(rng, 50);
    const auto b = random_element(rng, 50);
    hom_mul = hom_mul && table.residue(a * b) == table.residue(a) * table.residue(b);
    hom_add = hom_add && table.residue((a + b).canonical()) == table.residue(a) + table.residue(b);
  }
  rep.checks.emplace_back("residue map multiplicative on random pairs", hom_mul);
  rep.checks.emplace_back("residue map additive on random pairs", hom_add);

  const FieldCtx ctx(29);
  JacobiPropertyReport t1;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) check_jacobi_properties_for_pair<7>(ctx, i, j, true, t1);
  rep.checks.emplace_back("Jacobi sum properties at p = 29, e = 7", t1.ok());
  return rep;
}

}  // namespace jacobi49
