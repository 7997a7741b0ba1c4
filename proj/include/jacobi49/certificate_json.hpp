#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jacobi49/artiad.hpp"

namespace jacobi49 {

using Json = nlohmann::ordered_json;

template <int E>
Json to_json(const CycInt<E>& a) {
  const auto c = a.canonical();
  Json arr = Json::array();
  for (Int v : c.coeffs()) arr.push_back(v);
  return arr;
}

template <int E>
CycInt<E> cycint_from_json(const Json& j) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(E))
    throw InputError("expected a JSON array of " + std::to_string(E) + " integers");
  std::array<Int, E> c{};
  for (int k = 0; k < E; ++k) c[k] = j.at(k).get<Int>();
  return CycInt<E>::from_coeffs(c).canonical();
}

inline Json to_json(const Residue8& r) {
  Json arr = Json::array();
  for (int i = 0; i < kResidueLength; ++i) arr.push_back(int(r[i]));
  return arr;
}

template <int E>
Json to_json(const ModTable<E>& t) {
  return Json(t.rows());
}

inline Json to_json(const LWSolution& s) { return Json(std::vector<Int>(s.x.begin(), s.x.end())); }
inline Json to_json(const TUDecomp& tu) { return Json::array({tu.t, tu.u}); }

inline std::string describe(const Discrepancy& d) {
  return std::string(d.explained ? "[explained] " : "[unexplained] ") + d.code + ": " + d.detail;
}

inline Json to_json(const std::vector<Discrepancy>& ds) {
  Json arr = Json::array();
  for (const auto& d : ds) arr.push_back(describe(d));
  return arr;
}

inline Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline Json to_json(const std::array<ClosedFormCheck, 8>& rows) {
  Json out = Json::array();
  for (int i = 1; i <= 7; ++i) {
    const auto& c = rows[i];
    Json row;
    row["i"] = i;
    row["stated"] = c.stated.str();
    row["corrected"] = c.corrected.str();
    row["stated_integer"] = c.stated_integer;
    if (i <= 6) {
      row["stated_exact"] = c.stated_exact;
      row["corrected_exact"] = c.corrected_exact;
    }
    row["stated_mod7"] = optional_bool(c.stated_mod7);
    row["corrected_mod7"] = optional_bool(c.corrected_mod7);
    out.push_back(row);
  }
  return out;
}

inline Json to_json(const CongruenceCert& cert, const PrimeVerification& pv) {
  Json j;
  j["p"] = cert.p;
  j["gamma"] = cert.gamma;
  j["n"] = cert.n;
  j["predicted"] = to_json(cert.predicted);
  j["actual"] = to_json(cert.actual);
  j["match"] = cert.match;
  if (cert.valuation_of_difference) j["difference_valuation"] = *cert.valuation_of_difference;

  Json coeffs;
  Json def;
  def["n_prime"] = cert.coeffs.n_prime;
  def["trivial"] = cert.coeffs.trivial;
  if (!cert.coeffs.trivial)
    for (int i = 3; i <= 6; ++i) def["c" + std::to_string(i)] = cert.coeffs.c[i];
  def["c7"] = cert.coeffs.c7;
  coeffs["definition"] = def;
  coeffs["closed_form"] = cert.n == 1 && pv.closed_forms ? to_json(*pv.closed_forms) : Json(nullptr);
  Json s;
  s["s_direct"] = cert.coeffs.s_value;
  s["s_direct_mod7"] = cert.coeffs.c7;
  s["s_brackets"] = cert.s_brackets_value ? Json(*cert.s_brackets_value) : Json(nullptr);
  s["agree"] = cert.s_paths_agree;
  coeffs["s_paths"] = s;
  j["coeffs"] = coeffs;

  j["jacobi_paths"] = {{"direct_vs_cyclotomic", cert.jacobi_paths.direct_vs_cyc},
                       {"direct_vs_dickson_hurwitz", cert.jacobi_paths.direct_vs_dh}};
  j["jacobi"] = to_json(cert.jacobi);
  j["lw"] = to_json(pv.lw);
  j["tu"] = to_json(pv.tu);
  j["discrepancies"] = to_json(cert.discrepancies);
  return j;
}

inline Json to_json(const Classification& c) {
  Json j;
  j["p"] = c.p;
  j["gamma"] = c.gamma;
  j["kind"] = to_string(c.kind);
  Json ev;
  ev["via_x"] = c.via_x;
  ev["via_cubic"] = c.via_cubic;
  ev["ind7_zero"] = c.ind7_zero;
  ev["artiad_criterion"] = c.conditions ? Json(c.conditions->artiad_criterion()) : Json(nullptr);
  ev["hyperartiad_criterion"] = c.conditions ? Json(c.conditions->hyperartiad_criterion()) : Json(nullptr);
  ev["simplified_congruence_match"] = c.simplified ? Json(c.simplified->artiad_form_matches) : Json(nullptr);
  ev["classifiers_agree"] = c.classifiers_agree();
  ev["index_formula"] = c.index_formula_ok;
  ev["index_mod49_relation"] = c.mod49_relation;
  ev["artiad_criterion_agrees"] = optional_bool(c.artiad_criterion_agrees);
  ev["hyperartiad_criterion_agrees"] = optional_bool(c.hyperartiad_criterion_agrees);
  j["evidence"] = ev;
  j["ind7"] = c.ind7;
  j["ind7_mod7"] = c.ind7 % 7;
  j["lw"] = to_json(c.lw);
  if (c.conditions) {
    j["coefficient_conditions"] = {{"low_coeffs_vanish", c.conditions->low_coeffs_vanish},
                              {"c6_condition", c.conditions->c6_condition},
                              {"c7_condition", c.conditions->c7_condition},
                              {"c7_condition_without_ind", c.conditions->c7_condition_without_ind}};
  }
  if (c.simplified) {
    const auto& t = *c.simplified;
    j["simplified"] = {{"actual", to_json(t.actual)},
                     {"artiad_form", to_json(t.artiad_form)},
                     {"hyperartiad_form", to_json(t.hyperartiad_form)},
                     {"rescaled_form", to_json(t.rescaled_form)},
                     {"artiad_form_matches", t.artiad_form_matches},
                     {"hyperartiad_form_matches", t.hyperartiad_form_matches},
                     {"rescaled_form_matches", t.rescaled_form_matches},
                     {"holds", t.holds}};
  }
  return j;
}

inline Json to_json(const PrimeVerification& pv) {
  Json j;
  j["p"] = pv.p;
  j["gamma"] = pv.gamma;
  j["tu"] = to_json(pv.tu);
  j["lw"] = to_json(pv.lw);
  Json checks;
  checks["required_ok"] = pv.required_ok();
  checks["norm_equation"] = pv.diophantine.norm;
  checks["x1_mod7"] = pv.x1_mod7;
  checks["parity"] = pv.parity;
  checks["orbit"] = pv.orbit_ok;
  checks["aux1"] = pv.diophantine.aux1;
  checks["aux2_stated"] = pv.diophantine.aux2_stated;
  checks["aux2_x2_reading"] = pv.diophantine.aux2_x2_reading;
  checks["aux2_fitted"] = pv.diophantine.aux2_fitted;
  checks["order7_table"] = {{"matches", pv.table7.matches},
                   {"u_sign", pv.table7.u_sign},
                   {"t_recovered", pv.table7.t_recovered},
                   {"t_consistent", pv.table7.t_consistent},
                   {"stated_0_1_row_matches", pv.table7.stated_01_matches}};
  checks["dickson_hurwitz_identities"] = {{"e7", pv.dh_identities7}, {"e49", pv.dh_identities49}};
  checks["six_fold_symmetry"] = {{"e7", pv.symmetry7}, {"e49", pv.symmetry49}};
  checks["jacobi7_paths"] = pv.jacobi7_paths.all();
  checks["jacobi_properties"] = {{"pairs", pv.jacobi_properties.pairs_checked},
                        {"modulus_checks", pv.jacobi_properties.modulus_checks},
                        {"failures", pv.jacobi_properties.failures}};
  checks["closed_form_quotient_div7"] = pv.closed_form_quotient_div7;
  j["checks"] = checks;
  j["discrepancies"] = to_json(pv.discrepancies);
  Json certs = Json::array();
  for (const auto& c : pv.certs) certs.push_back(to_json(c, pv));
  j["certificates"] = certs;
  return j;
}

}  // namespace jacobi49
