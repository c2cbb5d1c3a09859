#include "gf2gauss/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gf2gauss/charsum.hpp"
#include "json.hpp"

namespace gf2gauss {

namespace {

// Sweeps bigger than these fall back to sampling or emit a skip record.
constexpr int kExhaustiveBetaLimit = 12;
constexpr int kExhaustiveCubeLimit = 13;
constexpr int kSweepBudget = FieldContext::kTableDegreeLimit;
constexpr int kParsevalLimit = 10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::string show(const CycloSum& v) {
  const std::vector<std::int64_t>& c = v.coeffs();
  if (std::all_of(c.begin() + 1, c.end(),
                  [](std::int64_t x) { return x == 0; }))
    return std::to_string(c.front());
  if (v.order() == 3) {
    const Eisenstein e = v.as_eisenstein();
    return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + "w)";
  }
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

struct Outcome {
  std::string computed;
  bool ok = false;
};

class SuiteRunner {
public:
  explicit SuiteRunner(const SuiteConfig& cfg) : cfg_(cfg) {
    closed_ = cfg.closed_form
                  ? cfg.closed_form
                  : [](int s) { return gauss_sum_closed_form(s); };
  }

  VerificationReport run();

private:
  const SuiteConfig& cfg_;
  std::function<std::int64_t(int)> closed_;
  std::map<int, FieldContext> fields_;
  std::vector<CheckRecord> checks_;

  const FieldContext& field(int s) {
    auto it = fields_.find(s);
    if (it == fields_.end()) it = fields_.emplace(s, build_field(s)).first;
    return it->second;
  }

  std::mt19937_64 rng(int claim_idx, int degree) const {
    const std::uint64_t mix =
        splitmix64((static_cast<std::uint64_t>(claim_idx) << 32) |
                   static_cast<std::uint32_t>(degree));
    return std::mt19937_64(splitmix64(cfg_.sampling.seed ^ mix));
  }

  std::vector<FieldElement> nonzero_betas(const FieldContext& ctx,
                                          int claim_idx) const {
    std::vector<FieldElement> out;
    if (cfg_.sampling.kind == Sampling::Kind::kExhaustive &&
        ctx.degree() <= kExhaustiveBetaLimit) {
      out.reserve(ctx.order());
      for (std::uint32_t b = 1; b <= ctx.order(); ++b) out.push_back(b);
      return out;
    }
    std::mt19937_64 gen = rng(claim_idx, ctx.degree());
    std::uniform_int_distribution<std::uint32_t> pick(1, ctx.order());
    out.reserve(cfg_.sampling.count);
    for (int i = 0; i < cfg_.sampling.count; ++i) out.push_back(pick(gen));
    return out;
  }

  template <class Fn>
  void timed(const std::string& claim, int s, std::string detail,
             std::string expected, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    checks_.push_back(CheckRecord{claim, s, std::move(detail),
                                  std::move(expected), std::move(o.computed),
                                  o.ok, ms});
  }

  void skip(const std::string& claim, int s) {
    checks_.push_back(CheckRecord{claim, s, "beyond the sweep budget", "",
                                  "skipped", true, 0.0});
  }

  void placeholder(const std::string& claim) {
    checks_.push_back(CheckRecord{claim, 0, "no applicable degrees in range",
                                  "", "skipped", true, 0.0});
  }

  // ---- individual claims, in registry order ----

  void kummer_values(int idx, const std::string& claim, int s,
                     const CharacterSpec& chi, const std::string& prefix) {
    const FieldContext& ctx = chi.field();
    const std::int64_t q1 = static_cast<std::int64_t>(ctx.order());
    timed(claim, s, prefix + "beta=0", std::to_string(q1), [&] {
      const CycloSum v = kummer_sum(chi, 0, cfg_.workers);
      return Outcome{show(v), v.equals_integer(q1)};
    });
    timed(claim, s, prefix + "beta!=0 sweep", "-1 for every tested beta", [&] {
      const std::vector<FieldElement> betas = nonzero_betas(ctx, idx);
      for (FieldElement b : betas) {
        const CycloSum v = kummer_sum(chi, b, cfg_.workers);
        if (!v.equals_integer(-1))
          return Outcome{"mismatch at beta=" + hex(b) + ": " + show(v), false};
      }
      return Outcome{"-1 for " + std::to_string(betas.size()) + " betas", true};
    });
  }

  void claim_l1(int idx) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("L1", s);
        continue;
      }
      const FieldContext& ctx = field(s);
      kummer_values(idx, "L1", s, make_character(ctx, 3), "");
      if (s == 4) kummer_values(idx, "L1", s, make_character(ctx, 5), "order-5 ");
    }
    if (!any) placeholder("L1");
  }

  void claim_l2(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("L2", s);
        continue;
      }
      const CharacterSpec chi = make_character(field(s), 3);
      const CycloSum g = gauss_sum(chi, 1, cfg_.workers).value;
      timed("L2", s, "shifted self sum vs gauss sum", show(g), [&] {
        const CycloSum v = shifted_self_sum(chi, cfg_.workers);
        return Outcome{show(v), v == g};
      });
    }
    if (!any) placeholder("L2");
  }

  void reality(const std::string& claim, int s, const CharacterSpec& chi,
               const std::string& detail) {
    timed(claim, s, detail, "real", [&] {
      const CycloSum g = gauss_sum(chi, 1, cfg_.workers).value;
      return Outcome{g.is_real() ? "real" : "nonreal: " + show(g),
                     g.is_real()};
    });
  }

  void claim_l3(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("L3", s);
        continue;
      }
      const FieldContext& ctx = field(s);
      reality("L3", s, make_character(ctx, 3), "cubic");
      if (s == 4 || s == 8)
        reality("L3", s, make_character(ctx, 5), "order-5");
    }
    if (!any) placeholder("L3");
  }

  void claim_eq1(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("EQ1", s);
        continue;
      }
      const CharacterSpec chi = make_character(field(s), 3);
      const CycloSum g = gauss_sum(chi, 1, cfg_.workers).value;
      const TraceClassSplit split = gauss_sum_via_trace_class(chi, cfg_.workers);
      timed("EQ1", s, "doubled trace-0 class sum", show(g), [&] {
        return Outcome{show(split.record.value), split.record.value == g};
      });
      timed("EQ1", s, "trace-0 sum vs negated trace-1 sum", show(split.class0),
            [&] {
              const CycloSum neg = -split.class1;
              return Outcome{show(neg), split.class0 == neg};
            });
    }
    if (!any) placeholder("EQ1");
  }

  void claim_eq34(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("EQ3-4", s);
        continue;
      }
      const CharacterSpec chi = make_character(field(s), 3);
      const std::int64_t sq = std::int64_t{1} << s;
      timed("EQ3-4", s, "squared magnitude at beta=1", std::to_string(sq), [&] {
        const std::int64_t n =
            norm(gauss_sum(chi, 1, cfg_.workers).value.as_eisenstein());
        return Outcome{std::to_string(n), n == sq};
      });
      if (s <= kParsevalLimit) {
        const std::int64_t want = sq * (sq - 1);
        timed("EQ3-4", s, "squared magnitudes summed over beta",
              std::to_string(want), [&] {
                const std::int64_t t = parseval_total(chi, cfg_.workers);
                return Outcome{std::to_string(t), t == want};
              });
      }
    }
    if (!any) placeholder("EQ3-4");
  }

  void claim_t1(int idx) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2 || (s / 2) % 2 == 0) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("T1", s);
        continue;
      }
      const int m = s / 2;
      const FieldContext& ctx = field(s);
      const CharacterSpec chi = make_character(ctx, 3);
      timed("T1", s, "subfield sums over relative-trace-1 shifts", "-1", [&] {
        std::vector<FieldElement> alphas;
        if (m <= 3) {
          for (std::uint32_t a = 0; a < ctx.size(); ++a)
            if (ctx.relative_trace(a, m) == 1) alphas.push_back(a);
        } else {
          std::mt19937_64 gen = rng(idx, s);
          std::uniform_int_distribution<std::uint32_t> pick(0, ctx.order());
          while (alphas.size() < 64) {
            const FieldElement a = pick(gen);
            if (ctx.relative_trace(a, m) == 1) alphas.push_back(a);
          }
        }
        for (FieldElement a : alphas) {
          const CycloSum v = a_sum(chi, a);
          if (!v.equals_integer(-1))
            return Outcome{"a=" + hex(a) + ": " + show(v), false};
        }
        return Outcome{"-1 for " + std::to_string(alphas.size()) + " shifts",
                       true};
      });
      const std::int64_t want = std::int64_t{1} << m;
      timed("T1", s, "gauss sum value", std::to_string(want), [&] {
        const CycloSum g = gauss_sum(chi, 1, cfg_.workers).value;
        return Outcome{show(g), g.equals_integer(want)};
      });
    }
    if (!any) placeholder("T1");
  }

  void claim_t2(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 4) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("T2", s);
        continue;
      }
      const int m = s / 2;
      const FactorizationCheck fc = degree_doubling_factorization(m, cfg_.workers);
      timed("T2", s, "doubled degree vs scaled half degree",
            std::to_string(fc.rhs), [&] {
              return Outcome{std::to_string(fc.lhs), fc.lhs == fc.rhs};
            });
      const std::int64_t want = closed_(s);
      timed("T2", s, "closed-form prediction", std::to_string(want), [&] {
        return Outcome{std::to_string(fc.lhs), fc.lhs == want};
      });
    }
    if (!any) placeholder("T2");
  }

  void claim_cor(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("COR", s);
        continue;
      }
      const std::int64_t want = closed_(s);
      timed("COR", s, "brute force vs closed form", std::to_string(want), [&] {
        const CycloSum g =
            gauss_sum(make_character(field(s), 3), 1, cfg_.workers).value;
        return Outcome{show(g), g.equals_integer(want)};
      });
    }
    if (!any) placeholder("COR");
  }

  void claim_init(int) {
    static constexpr std::int64_t kTable[] = {2, -4, 8, -16, 32};
    bool any = false;
    for (int s = 2; s <= 10; s += 2) {
      if (s < cfg_.degree_min || s > cfg_.degree_max) continue;
      any = true;
      const std::int64_t want = kTable[s / 2 - 1];
      const FieldContext& ctx = field(s);
      timed("INIT", s, "fixed value, canonical modulus", std::to_string(want),
            [&] {
              const CycloSum g =
                  gauss_sum(make_character(ctx, 3), 1, cfg_.workers).value;
              return Outcome{show(g), g.equals_integer(want)};
            });
      const std::uint32_t alt = next_irreducible(s, ctx.modulus());
      if (alt != 0) {
        timed("INIT", s, "fixed value, modulus " + hex(alt),
              std::to_string(want), [&] {
                const FieldContext actx = build_field(s, alt);
                const CycloSum g =
                    gauss_sum(make_character(actx, 3), 1, cfg_.workers).value;
                return Outcome{show(g), g.equals_integer(want)};
              });
      }
    }
    if (!any) placeholder("INIT");
  }

  void claim_odd(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2 == 0) continue;
      any = true;
      if (s > kSweepBudget) {
        skip("ODD", s);
        continue;
      }
      timed("ODD", s, "brute force value", "-1", [&] {
        const CycloSum g =
            gauss_sum(make_character(field(s), 3), 1, cfg_.workers).value;
        return Outcome{show(g), g.equals_integer(-1)};
      });
    }
    if (!any) placeholder("ODD");
  }

  void claim_trace_bal(int) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      any = true;
      if (s > kSweepBudget) {
        skip("TRACE-BAL", s);
        continue;
      }
      const FieldContext& ctx = field(s);
      const std::uint64_t half = std::uint64_t{1} << (s - 1);
      timed("TRACE-BAL", s, "trace-0 population", std::to_string(half), [&] {
        std::uint64_t zeros = 0;
        for (std::uint64_t x = 0; x < ctx.size(); ++x)
          zeros += ctx.trace(static_cast<FieldElement>(x)) == 0;
        return Outcome{std::to_string(zeros), zeros == half};
      });
    }
    if (!any) placeholder("TRACE-BAL");
  }

  void claim_cube_id(int idx) {
    bool any = false;
    for (int s = cfg_.degree_min; s <= cfg_.degree_max; ++s) {
      if (s % 2 == 0) continue;
      any = true;
      const FieldContext& ctx = field(s);
      const std::uint64_t e = ((std::uint64_t{1} << (s + 1)) - 1) / 3;
      timed("CUBE-ID", s, "cube of the canonical cube root", "identity", [&] {
        std::vector<FieldElement> betas;
        if (cfg_.sampling.kind == Sampling::Kind::kExhaustive &&
            s <= kExhaustiveCubeLimit) {
          for (std::uint32_t b = 0; b < ctx.size(); ++b) betas.push_back(b);
        } else {
          std::mt19937_64 gen = rng(idx, s);
          std::uniform_int_distribution<std::uint32_t> pick(0, ctx.order());
          for (int i = 0; i < cfg_.sampling.count; ++i)
            betas.push_back(pick(gen));
        }
        for (FieldElement b : betas) {
          const FieldElement root = ctx.pow(b, e);
          if (ctx.mul(ctx.mul(root, root), root) != b)
            return Outcome{"fails at beta=" + hex(b), false};
        }
        return Outcome{
            "identity for " + std::to_string(betas.size()) + " betas", true};
      });
    }
    if (!any) placeholder("CUBE-ID");
  }
};

VerificationReport SuiteRunner::run() {
  const std::vector<std::string>& registry = claim_registry();
  for (const std::string& c : cfg_.claims)
    if (std::find(registry.begin(), registry.end(), c) == registry.end())
      throw std::invalid_argument("unknown claim id: " + c);
  if (cfg_.claims.empty()) throw std::invalid_argument("no claims requested");
  if (cfg_.degree_min < 1 || cfg_.degree_max > FieldContext::kMaxDegree ||
      cfg_.degree_min > cfg_.degree_max)
    throw std::invalid_argument("degree range is empty or out of bounds");

  using Member = void (SuiteRunner::*)(int);
  static constexpr Member kDispatch[] = {
      &SuiteRunner::claim_l1,  &SuiteRunner::claim_l2,
      &SuiteRunner::claim_l3,  &SuiteRunner::claim_eq1,
      &SuiteRunner::claim_eq34, &SuiteRunner::claim_t1,
      &SuiteRunner::claim_t2,  &SuiteRunner::claim_cor,
      &SuiteRunner::claim_init, &SuiteRunner::claim_odd,
      &SuiteRunner::claim_trace_bal, &SuiteRunner::claim_cube_id};

  for (std::size_t i = 0; i < registry.size(); ++i)
    if (std::find(cfg_.claims.begin(), cfg_.claims.end(), registry[i]) !=
        cfg_.claims.end())
      (this->*kDispatch[i])(static_cast<int>(i));

  VerificationReport report;
  report.degree_min = cfg_.degree_min;
  report.degree_max = cfg_.degree_max;
  if (cfg_.sampling.kind == Sampling::Kind::kExhaustive) {
    report.sampling = "exhaustive";
  } else {
    report.sampling = "random(count=" + std::to_string(cfg_.sampling.count) +
                      ",seed=" + std::to_string(cfg_.sampling.seed) + ")";
  }
  report.workers = cfg_.workers;
  for (const auto& [deg, ctx] : fields_)
    report.moduli.push_back(std::to_string(deg) + ":" + hex(ctx.modulus()));
  report.checks = std::move(checks_);
  return report;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> kRegistry = {
      "L1", "L2",  "L3",   "EQ1", "EQ3-4",     "T1",
      "T2", "COR", "INIT", "ODD", "TRACE-BAL", "CUBE-ID"};
  return kRegistry;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  return SuiteRunner(cfg).run();
}

std::string render_report(const VerificationReport& report, ReportFormat format,
                          bool include_timing) {
  switch (format) {
    case ReportFormat::kJson: {
      nlohmann::ordered_json j;
      j["suite"] = report.suite;
      j["status"] = report.passed() ? "pass" : "fail";
      j["config"] = {{"degree_min", report.degree_min},
                     {"degree_max", report.degree_max},
                     {"sampling", report.sampling},
                     {"moduli", report.moduli}};
      j["checks"] = nlohmann::ordered_json::array();
      for (const CheckRecord& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["claim"] = c.claim;
        jc["degree"] = c.degree;
        jc["detail"] = c.detail;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["status"] = c.passed ? "pass" : "fail";
        if (include_timing) jc["elapsed_ms"] = c.elapsed_ms;
        j["checks"].push_back(std::move(jc));
      }
      return j.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::ostringstream os;
      os << "claim,degree,detail,expected,computed,status";
      if (include_timing) os << ",elapsed_ms";
      os << "\n";
      for (const CheckRecord& c : report.checks) {
        os << csv_escape(c.claim) << "," << c.degree << ","
           << csv_escape(c.detail) << "," << csv_escape(c.expected) << ","
           << csv_escape(c.computed) << "," << (c.passed ? "pass" : "fail");
        if (include_timing) os << "," << c.elapsed_ms;
        os << "\n";
      }
      return os.str();
    }
    case ReportFormat::kText: {
      std::ostringstream os;
      os << "suite " << report.suite << ": degrees " << report.degree_min
         << ".." << report.degree_max << ", sampling " << report.sampling
         << "\n";
      int failed = 0;
      for (const CheckRecord& c : report.checks) {
        os << (c.passed ? "[pass] " : "[FAIL] ") << c.claim << " s="
           << c.degree << " " << c.detail;
        if (!c.expected.empty())
          os << ": expected " << c.expected << ", computed " << c.computed;
        else
          os << ": " << c.computed;
        if (include_timing) os << " (" << c.elapsed_ms << " ms)";
        os << "\n";
        failed += !c.passed;
      }
      os << "result: " << (report.passed() ? "pass" : "fail") << " ("
         << report.checks.size() << " checks, " << failed << " failed)\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace gf2gauss
