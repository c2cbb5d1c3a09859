// Command-line front end. Exit codes: 0 success, 1 a cross-check or claim
// failed, 2 configuration or usage error. With --format json exactly one
// JSON document is written to stdout; diagnostics go to stderr.
#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gf2gauss/charsum.hpp"
#include "gf2gauss/jsonio.hpp"
#include "gf2gauss/verifier.hpp"

using namespace gf2gauss;
using nlohmann::ordered_json;

namespace {

enum class Format { kJson, kCsv, kText };

Format to_format(const std::string& f) {
  if (f == "json") return Format::kJson;
  if (f == "csv") return Format::kCsv;
  return Format::kText;
}

std::string csv_cell(const ordered_json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One flat record in the chosen format.
void emit(Format fmt, const ordered_json& j) {
  switch (fmt) {
    case Format::kJson:
      std::cout << j.dump(2) << "\n";
      return;
    case Format::kCsv: {
      std::string head, row;
      for (const auto& [key, value] : j.items()) {
        if (!head.empty()) {
          head += ",";
          row += ",";
        }
        head += key;
        row += csv_cell(value);
      }
      std::cout << head << "\n" << row << "\n";
      return;
    }
    case Format::kText:
      for (const auto& [key, value] : j.items())
        std::cout << key << ": "
                  << (value.is_string() ? value.get<std::string>()
                                        : value.dump())
                  << "\n";
      return;
  }
}

FieldContext make_ctx(int degree, const std::string& modulus_hex) {
  if (modulus_hex.empty()) return build_field(degree);
  return build_field(degree, parse_hex(modulus_hex));
}

FieldElement parse_element(const FieldContext& ctx, const std::string& hex) {
  const std::uint32_t v = parse_hex(hex);
  if (v >= ctx.size())
    throw std::invalid_argument("element " + hex + " outside the field");
  return v;
}

std::pair<int, int> parse_range(const std::string& r) {
  try {
    const std::size_t pos = r.find("..");
    if (pos == std::string::npos) {
      const int v = std::stoi(r);
      return {v, v};
    }
    return {std::stoi(r.substr(0, pos)), std::stoi(r.substr(pos + 2))};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad degree range: " + r);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("bad degree range: " + r);
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

struct Options {
  int degree = 0;
  std::string modulus;
  std::string beta = "0x1";
  std::string x;
  std::string alpha;
  int order = 3;
  std::string method = "brute_force";
  std::string format = "text";
  int workers = 0;
  bool no_crosscheck = false;
  std::string claims;
  std::string range = "1..16";
  std::string sampling = "exhaustive";
  int samples = 256;
  std::uint64_t seed = 0;
  bool no_timing = false;
};

int run_field(const Options& o) {
  const FieldContext ctx = make_ctx(o.degree, o.modulus);
  std::string fact;
  for (const PrimePower& pp : factorize(ctx.order())) {
    if (!fact.empty()) fact += " * ";
    fact += std::to_string(pp.prime);
    if (pp.exponent > 1) fact += "^" + std::to_string(pp.exponent);
  }
  if (fact.empty()) fact = "1";
  emit(to_format(o.format),
       ordered_json{{"degree", ctx.degree()},
                    {"modulus", hex_string(ctx.modulus())},
                    {"generator", hex_string(ctx.generator())},
                    {"order", ctx.order()},
                    {"factorization", fact}});
  return 0;
}

int run_char(const Options& o) {
  const FieldContext ctx = make_ctx(o.degree, o.modulus);
  const CharacterSpec spec = make_character(ctx, o.order);
  const FieldElement x = parse_element(ctx, o.x);
  const int k = spec.exponent(x);
  emit(to_format(o.format),
       ordered_json{{"degree", ctx.degree()},
                    {"order", spec.order()},
                    {"trivial", spec.trivial()},
                    {"x", hex_string(x)},
                    {"exponent", k < 0 ? ordered_json(nullptr) : ordered_json(k)},
                    {"value", to_json(k < 0 ? CycloSum::integer(spec.order(), 0)
                                            : CycloSum::unit(spec.order(), k))}});
  return 0;
}

int run_gauss(const Options& o) {
  const FieldContext ctx = make_ctx(o.degree, o.modulus);
  const CharacterSpec spec = make_character(ctx, o.order);
  const FieldElement beta = parse_element(ctx, o.beta);
  GaussSumRecord rec;
  if (o.method == "brute_force") {
    rec = gauss_sum(spec, beta, o.workers);
  } else if (o.method == "trace_class") {
    if (beta != 1)
      throw std::invalid_argument("trace_class evaluates at beta=0x1");
    rec = gauss_sum_via_trace_class(spec, o.workers).record;
  } else if (o.method == "twist") {
    rec = gauss_sum_via_twist(spec, beta, o.workers);
  } else {  // closed_form
    if (o.order != 3)
      throw std::invalid_argument("closed form covers the cubic character");
    if (beta != 1)
      throw std::invalid_argument("closed form evaluates at beta=0x1");
    rec.degree = ctx.degree();
    rec.modulus = ctx.modulus();
    rec.generator = ctx.generator();
    rec.beta = 1;
    rec.method = SumMethod::kClosedForm;
    rec.value = CycloSum::integer(3, gauss_sum_closed_form(ctx.degree()));
    rec.elapsed_ms = 0.0;
  }
  ordered_json j = to_json(rec);
  int code = 0;
  if (!o.no_crosscheck && o.order == 3 && beta == 1 &&
      o.method != "closed_form") {
    const std::int64_t cf = gauss_sum_closed_form(ctx.degree());
    const bool ok = rec.value.equals_integer(cf);
    j["closed_form"] = cf;
    j["crosscheck"] = ok ? "pass" : "fail";
    if (!ok) code = 1;
  } else {
    j["crosscheck"] = "skipped";
  }
  emit(to_format(o.format), j);
  if (code != 0)
    std::cerr << "closed-form cross-check failed for degree " << o.degree
              << "\n";
  return code;
}

int run_kummer(const Options& o) {
  const FieldContext ctx = make_ctx(o.degree, o.modulus);
  const CharacterSpec spec = make_character(ctx, o.order);
  const FieldElement beta = parse_element(ctx, o.beta);
  const CycloSum v = kummer_sum(spec, beta, o.workers);
  emit(to_format(o.format), ordered_json{{"degree", ctx.degree()},
                                         {"order", spec.order()},
                                         {"beta", hex_string(beta)},
                                         {"value", to_json(v)}});
  return 0;
}

int run_asum(const Options& o) {
  const FieldContext ctx = make_ctx(o.degree, o.modulus);
  const CharacterSpec spec = make_character(ctx, o.order);
  const FieldElement alpha = parse_element(ctx, o.alpha);
  const CycloSum v = a_sum(spec, alpha);
  emit(to_format(o.format), ordered_json{{"degree", ctx.degree()},
                                         {"order", spec.order()},
                                         {"alpha", hex_string(alpha)},
                                         {"value", to_json(v)}});
  return 0;
}

int run_mcounts(const Options& o) {
  const FieldContext ctx = make_ctx(o.degree, o.modulus);
  const CharacterSpec spec = make_character(ctx, 3);
  const MCounts c = m_counts(spec, o.workers);
  emit(to_format(o.format), ordered_json{{"degree", ctx.degree()},
                                         {"m0", c.m0},
                                         {"m1", c.m1},
                                         {"m2", c.m2}});
  return 0;
}

int run_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.claims = o.claims.empty() ? claim_registry() : split_csv(o.claims);
  const auto [lo, hi] = parse_range(o.range);
  cfg.degree_min = lo;
  cfg.degree_max = hi;
  cfg.sampling.kind = o.sampling == "random" ? Sampling::Kind::kRandom
                                             : Sampling::Kind::kExhaustive;
  cfg.sampling.count = o.samples;
  cfg.sampling.seed = o.seed;
  cfg.workers = o.workers;
  const VerificationReport report = run_suite(cfg);
  ReportFormat rf = ReportFormat::kText;
  if (o.format == "json") rf = ReportFormat::kJson;
  if (o.format == "csv") rf = ReportFormat::kCsv;
  std::cout << render_report(report, rf, !o.no_timing);
  if (!report.passed()) std::cerr << "verification failed\n";
  return report.passed() ? 0 : 1;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_workers(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers,
                  "0 = all cores, 1 = serial reference kernel")
      ->envname("GF2GAUSS_WORKERS");
}

void add_field_opts(CLI::App* cmd, Options& o) {
  cmd->add_option("--degree", o.degree, "extension degree s of GF(2^s)")
      ->required();
  cmd->add_option("--modulus", o.modulus,
                  "irreducible bitmask polynomial, hex (default: smallest)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicative character sums over GF(2^s)"};
  app.require_subcommand(1);
  Options o;

  CLI::App* field_cmd =
      app.add_subcommand("field", "construct a field and print its parameters");
  add_field_opts(field_cmd, o);
  add_format(field_cmd, o);

  CLI::App* char_cmd =
      app.add_subcommand("char", "evaluate the character at one element");
  add_field_opts(char_cmd, o);
  char_cmd->add_option("--order", o.order, "character order (prime)");
  char_cmd->add_option("--x", o.x, "element, hex")->required();
  add_format(char_cmd, o);

  CLI::App* gauss_cmd = app.add_subcommand("gauss", "gauss sum at beta");
  add_field_opts(gauss_cmd, o);
  gauss_cmd->add_option("--order", o.order, "character order (prime)");
  gauss_cmd->add_option("--beta", o.beta, "element, hex (default 0x1)");
  gauss_cmd
      ->add_option("--method", o.method,
                   "brute_force, trace_class, twist, or closed_form")
      ->check(CLI::IsMember(
          {"brute_force", "trace_class", "twist", "closed_form"}));
  gauss_cmd->add_flag("--no-crosscheck", o.no_crosscheck,
                      "skip the closed-form comparison");
  add_workers(gauss_cmd, o);
  add_format(gauss_cmd, o);

  CLI::App* kummer_cmd =
      app.add_subcommand("kummer", "kummer sum at beta");
  add_field_opts(kummer_cmd, o);
  kummer_cmd->add_option("--order", o.order, "character order (prime)");
  kummer_cmd->add_option("--beta", o.beta, "element, hex (default 0x1)");
  add_workers(kummer_cmd, o);
  add_format(kummer_cmd, o);

  CLI::App* asum_cmd = app.add_subcommand(
      "asum", "index-2 subfield sum shifted by alpha (even degree)");
  add_field_opts(asum_cmd, o);
  asum_cmd->add_option("--order", o.order, "character order (prime)");
  asum_cmd->add_option("--alpha", o.alpha, "element with relative trace 1, hex")
      ->required();
  add_format(asum_cmd, o);

  CLI::App* mcounts_cmd = app.add_subcommand(
      "mcounts", "cubic classes of relative-trace-1 elements (even degree)");
  add_field_opts(mcounts_cmd, o);
  add_workers(mcounts_cmd, o);
  add_format(mcounts_cmd, o);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "replay registered claims over a range");
  verify_cmd->add_option("--claims", o.claims,
                         "comma-separated claim ids (default: all)");
  verify_cmd->add_option("--range", o.range, "degrees, e.g. 2..10 or 8");
  verify_cmd->add_option("--sampling", o.sampling, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--samples", o.samples, "draws per degree when random");
  verify_cmd->add_option("--seed", o.seed, "sampling seed");
  verify_cmd->add_flag("--no-timing", o.no_timing,
                       "omit elapsed fields from the report");
  add_workers(verify_cmd, o);
  add_format(verify_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (field_cmd->parsed()) return run_field(o);
    if (char_cmd->parsed()) return run_char(o);
    if (gauss_cmd->parsed()) return run_gauss(o);
    if (kummer_cmd->parsed()) return run_kummer(o);
    if (asum_cmd->parsed()) return run_asum(o);
    if (mcounts_cmd->parsed()) return run_mcounts(o);
    if (verify_cmd->parsed()) return run_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
