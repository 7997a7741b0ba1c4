#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jacobi49/certificate_json.hpp"

#ifndef JACOBI49_VERSION
#define JACOBI49_VERSION "0.0.0"
#endif

namespace jacobi49 {

inline constexpr const char* kVersion = JACOBI49_VERSION;
inline constexpr Int kExtensionStep = 20000;
inline constexpr Int kExtensionLimit = 1000000;

enum class ScanFormat { json, csv };

struct ScanConfig {
  Int min = 2;
  Int max = 2;
  int modulus = 49;
  bool all_n = false;
  unsigned jobs = 1;
  std::string output;
  ScanFormat format = ScanFormat::json;
  bool extend_until_artiad = false;

  void validate() const {
    if (min > max) throw InputError("--min must not exceed --max");
    if (min < 0) throw InputError("--min must be non-negative");
    if (modulus != 14 && modulus != 49) throw InputError("--modulus must be 14 or 49");
    if (jobs < 1) throw InputError("--jobs must be at least 1");
    if (max > kMaxTablePrime) throw InputError("--max exceeds " + std::to_string(kMaxTablePrime));
  }
};

struct ScanEntry {
  Int p = 0;
  std::optional<Classification> classification;
  std::optional<PrimeVerification> verification;
  std::optional<std::string> error;  // invariant or overflow failure for this prime

  bool ok() const {
    if (error) return false;
    return !verification || (verification->all_match() && verification->required_ok());
  }
};

struct ScanSummary {
  std::size_t primes = 0;
  std::size_t ordinary = 0;
  std::size_t artiad = 0;
  std::size_t hyperartiad = 0;
  std::size_t certificates = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
  std::size_t unexplained_discrepancies = 0;
  std::size_t explained_discrepancies = 0;
  bool classifier_disagreements = false;
  bool artiad_criterion_failures = false;
  bool hyperartiad_criterion_failures = false;
  bool simplified_congruence_failures = false;
  std::optional<Int> first_artiad;
};

struct ScanReport {
  ScanConfig config;
  Int scanned_max = 0;  // exceeds config.max when the range was extended
  std::vector<ScanEntry> entries;
  ScanSummary summary;
  std::int64_t runtime_ms = 0;

  bool ok() const { return summary.mismatches == 0 && summary.errors == 0; }
};

inline std::vector<Int> primes_in_class(Int lo, Int hi, int modulus) {
  std::vector<Int> out;
  if (hi < 2 || lo > hi) return out;
  const auto n = static_cast<std::size_t>(hi) + 1;
  std::vector<bool> composite(n, false);
  for (std::size_t i = 2; i * i < n; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j < n; j += i) composite[j] = true;
  for (Int q = std::max<Int>(lo, 2); q <= hi; ++q)
    if (!composite[static_cast<std::size_t>(q)] && q % modulus == 1) out.push_back(q);
  return out;
}

inline ScanEntry scan_one(Int p, bool all_n) {
  ScanEntry e;
  e.p = p;
  try {
    const FieldCtx ctx(p);
    if (mod(p, 49) == 1) {
      VerifyOptions opt;
      if (all_n) {
        opt.n_values.clear();
        for (int n = 1; n < 49; ++n) opt.n_values.push_back(n);
      }
      e.verification = verify_prime(ctx, opt);
      e.classification = classify(ctx, &*e.verification);
    } else {
      e.classification = classify(ctx);
    }
  } catch (const InvariantViolation& ex) {
    e.error = ex.what();
  } catch (const OverflowError& ex) {
    e.error = ex.what();
  } catch (const UnsupportedCase& ex) {
    e.error = ex.what();
  }
  return e;
}

// Per-prime work items are claimed from a shared counter; each slot of the
// result vector is written by exactly one worker.
inline std::vector<ScanEntry> run_pool(const std::vector<Int>& primes, bool all_n, unsigned jobs) {
  std::vector<ScanEntry> results(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) results[i] = scan_one(primes[i], all_n);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(primes.size())));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(count);
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  }
  std::sort(results.begin(), results.end(), [](const ScanEntry& a, const ScanEntry& b) { return a.p < b.p; });
  return results;
}

inline ScanSummary summarize(const std::vector<ScanEntry>& entries) {
  ScanSummary s;
  for (const auto& e : entries) {
    ++s.primes;
    if (e.error) ++s.errors;
    if (e.classification) {
      const auto& c = *e.classification;
      switch (c.kind) {
        case PrimeKind::ordinary: ++s.ordinary; break;
        case PrimeKind::artiad: ++s.artiad; break;
        case PrimeKind::hyperartiad: ++s.hyperartiad; break;
      }
      if (c.kind != PrimeKind::ordinary && !s.first_artiad) s.first_artiad = c.p;
      s.classifier_disagreements = s.classifier_disagreements || !c.classifiers_agree();
      s.artiad_criterion_failures = s.artiad_criterion_failures || !c.artiad_criterion_agrees.value_or(true);
      s.hyperartiad_criterion_failures = s.hyperartiad_criterion_failures || !c.hyperartiad_criterion_agrees.value_or(true);
      s.simplified_congruence_failures = s.simplified_congruence_failures || (c.simplified && !c.simplified->holds);
    }
    if (e.verification) {
      const auto& v = *e.verification;
      s.certificates += v.certs.size();
      for (const auto& cert : v.certs) {
        if (!cert.match) ++s.mismatches;
        for (const auto& d : cert.discrepancies) ++(d.explained ? s.explained_discrepancies : s.unexplained_discrepancies);
      }
      if (!v.required_ok()) ++s.mismatches;
      for (const auto& d : v.discrepancies) ++(d.explained ? s.explained_discrepancies : s.unexplained_discrepancies);
    }
  }
  return s;
}

inline ScanReport run_scan(const ScanConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  ScanReport rep;
  rep.config = config;
  rep.scanned_max = config.max;
  rep.entries = run_pool(primes_in_class(config.min, config.max, config.modulus), config.all_n, config.jobs);
  rep.summary = summarize(rep.entries);

  if (config.extend_until_artiad) {
    while (!rep.summary.first_artiad && rep.scanned_max < kExtensionLimit) {
      const Int lo = rep.scanned_max + 1;
      const Int hi = std::min(rep.scanned_max + kExtensionStep, kExtensionLimit);
      auto more = run_pool(primes_in_class(lo, hi, config.modulus), config.all_n, config.jobs);
      rep.entries.insert(rep.entries.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      rep.scanned_max = hi;
      rep.summary = summarize(rep.entries);
    }
  }
  rep.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline Json to_json(const ScanEntry& e) {
  Json j;
  j["p"] = e.p;
  j["classification"] = e.classification ? to_json(*e.classification) : Json(nullptr);
  j["verification"] = e.verification ? to_json(*e.verification) : Json(nullptr);
  j["error"] = e.error ? Json(*e.error) : Json(nullptr);
  return j;
}

inline Json to_json(const ScanReport& r) {
  Json j;
  j["tool"] = "jacobi49";
  j["version"] = kVersion;
  j["config"] = {{"min", r.config.min},
                 {"max", r.config.max},
                 {"modulus", r.config.modulus},
                 {"n_mode", r.config.all_n ? "all" : "single"},
                 {"format", r.config.format == ScanFormat::json ? "json" : "csv"},
                 {"extend_until_artiad", r.config.extend_until_artiad},
                 {"scanned_max", r.scanned_max}};
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  j["primes"] = entries;
  const auto& s = r.summary;
  j["summary"] = {{"primes", s.primes},
                  {"ordinary", s.ordinary},
                  {"artiad", s.artiad},
                  {"hyperartiad", s.hyperartiad},
                  {"certificates", s.certificates},
                  {"mismatches", s.mismatches},
                  {"errors", s.errors},
                  {"explained_discrepancies", s.explained_discrepancies},
                  {"unexplained_discrepancies", s.unexplained_discrepancies},
                  {"classifier_disagreements", s.classifier_disagreements},
                  {"artiad_criterion_failures", s.artiad_criterion_failures},
                  {"hyperartiad_criterion_failures", s.hyperartiad_criterion_failures},
                  {"simplified_congruence_failures", s.simplified_congruence_failures},
                  {"first_artiad", s.first_artiad ? Json(*s.first_artiad) : Json(nullptr)}};
  j["runtime"] = {{"ms", r.runtime_ms}, {"jobs", r.config.jobs}};
  return j;
}

inline void write_csv(std::ostream& os, const ScanReport& r) {
  os << "p,gamma,kind,n,match";
  for (int i = 0; i < kResidueLength; ++i) os << ",predicted_t" << i;
  for (int i = 0; i < kResidueLength; ++i) os << ",actual_t" << i;
  os << '\n';
  for (const auto& e : r.entries) {
    const std::string kind = e.error ? "error" : e.classification ? to_string(e.classification->kind) : "";
    if (!e.verification || e.verification->certs.empty()) {
      os << e.p << ',' << (e.classification ? std::to_string(e.classification->gamma) : "") << ',' << kind << ",,";
      for (int i = 0; i < 2 * kResidueLength; ++i) os << ',';
      os << '\n';
      continue;
    }
    for (const auto& c : e.verification->certs) {
      os << c.p << ',' << c.gamma << ',' << kind << ',' << c.n << ',' << (c.match ? "true" : "false");
      for (int i = 0; i < kResidueLength; ++i) os << ',' << int(c.predicted[i]);
      for (int i = 0; i < kResidueLength; ++i) os << ',' << int(c.actual[i]);
      os << '\n';
    }
  }
}

inline void write_report(const ScanReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open " + path + " for writing");
  if (r.config.format == ScanFormat::json)
    out << to_json(r).dump(2) << '\n';
  else
    write_csv(out, r);
  out.flush();
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace jacobi49
