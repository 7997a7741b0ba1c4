#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jacobi49/jacobi49.hpp"

namespace {

using namespace jacobi49;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::optional<Int> optional_generator(Int g) { return g > 0 ? std::optional<Int>(g) : std::nullopt; }

int cmd_verify(Int p, Int generator, bool all_n, int n) {
  require_verifiable_prime(p);
  VerifyOptions opt;
  if (all_n) {
    opt.n_values.clear();
    for (int k = 1; k < 49; ++k) opt.n_values.push_back(k);
  } else {
    if (n < 1 || n > 48) throw InputError("--n must lie in 1..48");
    opt.n_values = {n};
  }
  const auto pv = verify_prime(p, optional_generator(generator), opt);
  std::cout << to_json(pv).dump(2) << '\n';
  return pv.all_match() && pv.required_ok() ? kExitPass : kExitMismatch;
}

int cmd_classify(Int p, Int generator) {
  const auto c = classify(p, optional_generator(generator));
  std::cout << to_json(c).dump(2) << '\n';
  return kExitPass;
}

int cmd_scan(ScanConfig cfg, const std::string& format) {
  if (format == "json")
    cfg.format = ScanFormat::json;
  else if (format == "csv")
    cfg.format = ScanFormat::csv;
  else
    throw InputError("--format must be json or csv");
  cfg.validate();
  {
    std::ofstream probe(cfg.output, std::ios::app);
    if (!probe) throw InputError("cannot open " + cfg.output + " for writing");
  }
  const auto rep = run_scan(cfg);
  write_report(rep, cfg.output);
  const auto& s = rep.summary;
  std::cerr << "scanned " << s.primes << " primes up to " << rep.scanned_max << ": " << s.ordinary << " ordinary, "
            << s.artiad << " artiad, " << s.hyperartiad << " hyperartiad; " << s.certificates << " certificates, "
            << s.mismatches << " mismatches";
  if (s.first_artiad) std::cerr << "; first artiad " << *s.first_artiad;
  std::cerr << '\n';
  return rep.ok() ? kExitPass : kExitMismatch;
}

int cmd_selftest() {
  const auto start = std::chrono::steady_clock::now();
  const auto rep = run_selftest();
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  for (const auto& [name, pass] : rep.checks) std::cout << (pass ? "ok    " : "FAIL  ") << name << '\n';
  std::cout << "selftest " << (rep.ok() ? "passed" : "failed") << " in " << ms << " ms\n";
  return rep.ok() ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi sums of order 49 and septic artiad primes"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Int p = 0;
  Int generator = 0;
  bool all_n = false;
  int n = 1;

  auto* verify = app.add_subcommand("verify", "verify the congruence for J(1,n)_49 at one prime");
  verify->add_option("--prime", p, "prime p = 1 (mod 49)")->required();
  verify->add_option("--generator", generator, "primitive root (default: smallest)");
  verify->add_flag("--all-n", all_n, "check every n in 1..48");
  verify->add_option("--n", n, "single n to check (default 1)");

  auto* classify_cmd = app.add_subcommand("classify", "classify p = 1 (mod 14) as ordinary, artiad or hyperartiad");
  classify_cmd->add_option("--prime", p, "prime p = 1 (mod 14)")->required();
  classify_cmd->add_option("--generator", generator, "primitive root (default: smallest)");

  ScanConfig cfg;
  std::string format = "json";
  auto* scan = app.add_subcommand("scan", "classify and verify every prime in a range");
  scan->add_option("--min", cfg.min, "lower bound")->required();
  scan->add_option("--max", cfg.max, "upper bound")->required();
  scan->add_option("--modulus", cfg.modulus, "visit primes = 1 mod 14 or mod 49")->required();
  scan->add_flag("--all-n", cfg.all_n, "verify every n in 1..48");
  scan->add_option("--jobs", cfg.jobs, "worker threads");
  scan->add_option("--output", cfg.output, "report path")->required();
  scan->add_option("--format", format, "json or csv");
  scan->add_flag("--extend-until-artiad", cfg.extend_until_artiad,
                 "keep scanning in steps of 20000 up to 10^6 until an artiad prime appears");

  auto* selftest = app.add_subcommand("selftest", "run the startup algebra checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(p, generator, all_n, n);
    if (*classify_cmd) return cmd_classify(p, generator);
    if (*scan) return cmd_scan(cfg, format);
    if (*selftest) return cmd_selftest();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedCase& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
