// Integration gate: twelve independent criteria, one pass/fail line each.
// Run with no arguments for the full gate or with --only N for a single
// criterion (that is how ctest registers them). Exit 0 iff everything
// selected passed.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "gf2gauss/charsum.hpp"
#include "gf2gauss/gf2field.hpp"
#include "gf2gauss/verifier.hpp"

using namespace gf2gauss;

namespace {

bool suite_passes(std::vector<std::string> claims, int lo, int hi) {
  SuiteConfig cfg;
  cfg.claims = std::move(claims);
  cfg.degree_min = lo;
  cfg.degree_max = hi;
  return run_suite(cfg).passed();
}

// 1: brute force equals the closed form on 1..16 plus spot degrees 18, 20.
bool closed_form_equivalence() {
  std::vector<int> degrees;
  for (int s = 1; s <= 16; ++s) degrees.push_back(s);
  degrees.push_back(18);
  degrees.push_back(20);
  for (int s : degrees) {
    const FieldContext ctx = build_field(s);
    const CycloSum g = gauss_sum(make_character(ctx, 3), 1).value;
    if (!g.equals_integer(gauss_sum_closed_form(s))) {
      std::cerr << "  degree " << s << " disagrees with the closed form\n";
      return false;
    }
  }
  return true;
}

// 2: the five pinned small-degree values.
bool initial_values() {
  static constexpr std::int64_t kWant[] = {2, -4, 8, -16, 32};
  for (int s = 2; s <= 10; s += 2) {
    const CycloSum g = gauss_sum(make_character(build_field(s), 3), 1).value;
    if (!g.equals_integer(kWant[s / 2 - 1])) {
      std::cerr << "  degree " << s << " initial value mismatch\n";
      return false;
    }
  }
  return true;
}

// 3: kummer sums, exhaustive beta through degree 12 plus order 5 on GF(16).
bool kummer_values() { return suite_passes({"L1"}, 2, 12); }

// 4: shifted self sums reproduce gauss sums through degree 16.
bool shifted_sums() { return suite_passes({"L2"}, 2, 16); }

// 5: reality of the gauss sum, cubic through 16 and order 5 on 4 and 8.
bool reality() { return suite_passes({"L3"}, 2, 16); }

// 6: per-beta squared-magnitude totals and the norm identity.
bool magnitudes() { return suite_passes({"EQ3-4"}, 2, 16); }

// 7: subfield sums are -1 for odd half-degree (m = 1, 3 exhaustive, m = 5
// sampled) and the gauss sum is +2^m there.
bool subfield_sums() { return suite_passes({"T1"}, 2, 10); }

// 8: degree-doubling factorization with independently built fields.
bool factorization() {
  for (int m : {2, 4, 6}) {
    const FactorizationCheck fc = degree_doubling_factorization(m);
    if (fc.lhs != fc.rhs) {
      std::cerr << "  m=" << m << ": " << fc.lhs << " != " << fc.rhs << "\n";
      return false;
    }
  }
  return true;
}

// 9: class counts of relative-trace-1 elements.
bool class_counts() {
  for (int m : {2, 4, 6}) {
    const MCounts c = m_counts(make_character(build_field(2 * m), 3));
    const std::int64_t diff =
        static_cast<std::int64_t>(c.m0) - static_cast<std::int64_t>(c.m1);
    const std::int64_t want =
        (m / 2 % 2 == 0 ? 1 : -1) * (std::int64_t{1} << (m / 2));
    if (c.m0 + c.m1 + c.m2 != std::uint64_t{1} << m || c.m1 != c.m2 ||
        diff != want) {
      std::cerr << "  m=" << m << ": counts " << c.m0 << "," << c.m1 << ","
                << c.m2 << "\n";
      return false;
    }
  }
  return true;
}

// 10: trace balance, odd-degree cube identity, and the twist identity.
bool structural() {
  for (int s = 1; s <= 14; ++s) {
    const FieldContext ctx = build_field(s);
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < ctx.size(); ++x)
      zeros += ctx.trace(static_cast<FieldElement>(x)) == 0;
    if (zeros != std::uint64_t{1} << (s - 1)) {
      std::cerr << "  trace unbalanced at degree " << s << "\n";
      return false;
    }
  }
  for (int s = 1; s <= 13; s += 2) {
    const FieldContext ctx = build_field(s);
    const std::uint64_t e = ((std::uint64_t{1} << (s + 1)) - 1) / 3;
    for (std::uint32_t b = 0; b < ctx.size(); ++b) {
      const FieldElement r = ctx.pow(b, e);
      if (ctx.mul(ctx.mul(r, r), r) != b) {
        std::cerr << "  cube identity fails at degree " << s << "\n";
        return false;
      }
    }
  }
  for (int s = 2; s <= 10; s += 2) {
    const FieldContext ctx = build_field(s);
    const CharacterSpec chi = make_character(ctx, 3);
    for (std::uint32_t beta = 1; beta < ctx.size(); ++beta)
      if (!(gauss_sum_via_twist(chi, beta).value ==
            gauss_sum(chi, beta).value)) {
        std::cerr << "  twist identity fails at degree " << s << "\n";
        return false;
      }
  }
  return true;
}

// 11: serial and parallel runs, and repeated seeded runs, render the same
// report once timing is excluded.
bool determinism() {
  SuiteConfig cfg;
  cfg.claims = {"L1", "EQ1", "EQ3-4", "COR", "TRACE-BAL"};
  cfg.degree_min = 2;
  cfg.degree_max = 10;
  cfg.workers = 1;
  const std::string serial =
      render_report(run_suite(cfg), ReportFormat::kJson, false);
  cfg.workers = 4;
  const std::string parallel =
      render_report(run_suite(cfg), ReportFormat::kJson, false);
  if (serial != parallel) {
    std::cerr << "  serial vs parallel reports differ\n";
    return false;
  }
  SuiteConfig seeded;
  seeded.claims = {"T1", "CUBE-ID"};
  seeded.degree_min = 10;
  seeded.degree_max = 15;
  seeded.sampling.kind = Sampling::Kind::kRandom;
  seeded.sampling.count = 64;
  seeded.sampling.seed = 123;
  const std::string first =
      render_report(run_suite(seeded), ReportFormat::kJson, false);
  const std::string second =
      render_report(run_suite(seeded), ReportFormat::kJson, false);
  if (first != second) {
    std::cerr << "  seeded reruns differ\n";
    return false;
  }
  return true;
}

// 12: a corrupted closed form must turn the suite red.
bool mutation_sensitivity() {
  SuiteConfig cfg;
  cfg.claims = {"T2", "COR"};
  cfg.degree_min = 2;
  cfg.degree_max = 8;
  if (!run_suite(cfg).passed()) {
    std::cerr << "  honest run unexpectedly failed\n";
    return false;
  }
  cfg.closed_form = [](int s) {
    const std::int64_t v = gauss_sum_closed_form(s);
    return s % 2 == 0 ? -v : v;
  };
  if (run_suite(cfg).passed()) {
    std::cerr << "  corrupted closed form went undetected\n";
    return false;
  }
  return true;
}

struct Criterion {
  const char* label;
  bool (*fn)();
};

constexpr Criterion kCriteria[] = {
    {"closed form matches brute force (degrees 1..16, 18, 20)",
     closed_form_equivalence},
    {"initial values 2, -4, 8, -16, 32", initial_values},
    {"kummer sums (exhaustive beta to degree 12, order 5 on GF(16))",
     kummer_values},
    {"shifted self sums equal gauss sums (even degrees to 16)", shifted_sums},
    {"gauss sums at beta 1 are real (cubic to 16, order 5 on 4 and 8)",
     reality},
    {"squared-magnitude totals and norms", magnitudes},
    {"subfield sums -1 and gauss +2^m for odd half-degree", subfield_sums},
    {"degree-doubling factorization (m = 2, 4, 6)", factorization},
    {"relative-trace-1 class counts (m = 2, 4, 6)", class_counts},
    {"trace balance, cube identity, twist identity", structural},
    {"serial/parallel and seeded-rerun determinism", determinism},
    {"mutation sensitivity of the closed-form check", mutation_sensitivity},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 12) {
    std::cerr << "criterion number out of range\n";
    return 2;
  }
  bool all_ok = true;
  for (int i = 0; i < 12; ++i) {
    if (only != 0 && only != i + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = kCriteria[i].fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%2d/12] %s  %s  [%.2f s]\n", i + 1, ok ? "PASS" : "FAIL",
                kCriteria[i].label, secs);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
