// Claim replay harness: every identity the library asserts about Gauss,
// Kummer, and subfield sums is registered under a short claim id and can be
// re-checked over a degree range with exhaustive or seeded-random sampling.
//
//   L1         kummer sum values (q-1 at beta 0, -1 elsewhere)
//   L2         shifted self sum equals the Gauss sum at beta 1
//   L3         reality of the Gauss sum at beta 1
//   EQ1        trace-class split recombination
//   EQ3-4      squared-magnitude identities (per-beta total and norm)
//   T1         subfield sums -1 for odd half-degree, Gauss sum +2^m
//   T2         degree-doubling factorization
//   COR        closed form for even degrees
//   INIT       fixed small-degree values 2, -4, 8, -16, 32
//   ODD        value -1 for odd degrees
//   TRACE-BAL  trace takes each value on exactly half the field
//   CUBE-ID    odd-degree cube-root identity
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gf2gauss {

struct Sampling {
  enum class Kind { kExhaustive, kRandom };
  Kind kind = Kind::kExhaustive;
  int count = 256;          // draws per degree when kind == kRandom
  std::uint64_t seed = 0;
};

struct SuiteConfig {
  std::vector<std::string> claims;
  int degree_min = 2;
  int degree_max = 10;
  Sampling sampling;
  int workers = 0;
  // Closed-form override consulted by COR and T2; empty means the library
  // routine. Exists so a corrupted prediction provably turns the suite red.
  std::function<std::int64_t(int)> closed_form;
};

struct CheckRecord {
  std::string claim;
  int degree = 0;         // 0 for a placeholder when nothing applies
  std::string detail;
  std::string expected;
  std::string computed;
  bool passed = false;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string suite = "gf2gauss";
  int degree_min = 0;
  int degree_max = 0;
  std::string sampling;
  int workers = 0;
  std::vector<std::string> moduli;  // "s:0x.." per field built, ascending
  std::vector<CheckRecord> checks;  // claim-registry order
  bool passed() const {
    for (const CheckRecord& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Fixed registry; reports list checks in this order.
const std::vector<std::string>& claim_registry();

// Throws std::invalid_argument for an empty or unknown claim list or a
// degree range that is empty or outside the supported cap.
VerificationReport run_suite(const SuiteConfig& cfg);

enum class ReportFormat { kJson, kCsv, kText };

// Stable field order; with include_timing = false the output is
// byte-identical across reruns of the same configuration and seed.
std::string render_report(const VerificationReport& report, ReportFormat format,
                          bool include_timing = true);

}  // namespace gf2gauss
