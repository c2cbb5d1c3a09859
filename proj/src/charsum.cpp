#include "gf2gauss/charsum.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace gf2gauss {

namespace {

bool is_prime_small(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int resolve_workers(int workers) {
  return workers <= 0 ? omp_get_max_threads() : workers;
}

// Runs fn(y, acc) for every y in [0, count) and returns the elementwise sum
// of the per-thread counter vectors. Integer addition commutes, so the result
// is independent of the partition.
template <class Fn>
std::vector<std::int64_t> sweep(std::uint64_t count, std::size_t slots,
                                int workers, Fn&& fn) {
  std::vector<std::int64_t> acc(slots, 0);
  if (workers == 1) {
    for (std::uint64_t y = 0; y < count; ++y)
      fn(static_cast<FieldElement>(y), acc);
    return acc;
  }
  const int threads = resolve_workers(workers);
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::int64_t> local(slots, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t y = 0; y < static_cast<std::int64_t>(count); ++y)
      fn(static_cast<FieldElement>(y), local);
#pragma omp critical
    for (std::size_t i = 0; i < slots; ++i) acc[i] += local[i];
  }
  return acc;
}

// 2d slots: the chi class k of y lands in slot k + d*Tr(beta*y).
std::vector<std::int64_t> trace_split_counters(const CharacterSpec& spec,
                                               FieldElement beta,
                                               int workers) {
  const FieldContext& ctx = spec.field();
  const int d = spec.order();
  return sweep(ctx.size(), 2 * static_cast<std::size_t>(d), workers,
               [&](FieldElement y, std::vector<std::int64_t>& acc) {
                 const int k = spec.exponent_fast(y);
                 if (k < 0) return;
                 acc[k + d * ctx.trace(ctx.mul(beta, y))] += 1;
               });
}

CycloSum signed_counts_to_sum(int d, const std::vector<std::int64_t>& acc) {
  std::vector<std::int64_t> counts(d);
  for (int k = 0; k < d; ++k) counts[k] = acc[k] - acc[k + d];
  return CycloSum::from_class_counts(d, counts);
}

class Timer {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

GaussSumRecord make_record(const FieldContext& ctx, FieldElement beta,
                           SumMethod method, CycloSum value, double ms) {
  GaussSumRecord r;
  r.degree = ctx.degree();
  r.modulus = ctx.modulus();
  r.generator = ctx.generator();
  r.beta = beta;
  r.method = method;
  r.value = std::move(value);
  r.elapsed_ms = ms;
  return r;
}

void require_nontrivial(const CharacterSpec& spec, const char* what) {
  if (spec.trivial()) throw std::domain_error(what);
}

}  // namespace

int CharacterSpec::exponent(FieldElement x) const {
  if (x == 0) return kZero;
  if (trivial_) return 0;
  const FieldElement p = ctx_->pow(x, cofactor_);
  auto it = std::lower_bound(sorted_roots_.begin(), sorted_roots_.end(),
                             std::make_pair(p, -1));
  if (it == sorted_roots_.end() || it->first != p)
    throw std::logic_error("element escapes the character's root classes");
  return it->second;
}

CharacterSpec make_character(const FieldContext& ctx, int order) {
  if (!is_prime_small(order) || order > 255)
    throw std::invalid_argument("character order must be a small prime");
  CharacterSpec spec;
  spec.ctx_ = &ctx;
  spec.order_ = order;
  const std::uint32_t n = ctx.order();
  if (n % static_cast<std::uint32_t>(order) != 0) {
    if (order != 3)
      throw std::invalid_argument("character order does not divide 2^s - 1");
    spec.trivial_ = true;  // odd degree: cubing permutes the field
    return spec;
  }
  spec.cofactor_ = n / static_cast<std::uint32_t>(order);
  spec.roots_.reserve(order);
  for (int k = 0; k < order; ++k) {
    spec.roots_.push_back(ctx.pow(
        ctx.generator(), static_cast<std::uint64_t>(k) * spec.cofactor_));
    spec.sorted_roots_.emplace_back(spec.roots_.back(), k);
  }
  std::sort(spec.sorted_roots_.begin(), spec.sorted_roots_.end());
  if (ctx.has_tables()) {
    spec.cache_.assign(ctx.size(), 0);
    for (std::uint32_t e = 0; e < n; ++e)
      spec.cache_[ctx.antilog(e)] = static_cast<std::uint8_t>(e % order);
  }
  return spec;
}

const char* method_name(SumMethod m) {
  switch (m) {
    case SumMethod::kBruteForce: return "brute_force";
    case SumMethod::kTraceClass: return "trace_class";
    case SumMethod::kTwist: return "twist";
    case SumMethod::kClosedForm: return "closed_form";
  }
  return "unknown";
}

CycloSum total_sum(const CharacterSpec& spec, int workers) {
  const int d = spec.order();
  if (spec.trivial())
    return CycloSum::integer(d, static_cast<std::int64_t>(spec.field().order()));
  auto acc = sweep(spec.field().size(), d, workers,
                   [&](FieldElement y, std::vector<std::int64_t>& a) {
                     const int k = spec.exponent_fast(y);
                     if (k >= 0) a[k] += 1;
                   });
  return CycloSum::from_class_counts(d, acc);
}

GaussSumRecord gauss_sum(const CharacterSpec& spec, FieldElement beta,
                         int workers) {
  Timer t;
  auto acc = trace_split_counters(spec, beta, workers);
  CycloSum v = signed_counts_to_sum(spec.order(), acc);
  return make_record(spec.field(), beta, SumMethod::kBruteForce, std::move(v),
                     t.ms());
}

std::int64_t gauss_sum_closed_form(int degree) {
  if (degree < 1 || degree > 62)
    throw std::invalid_argument("degree out of range");
  if (degree % 2 == 1) return -1;
  const int m = degree / 2;
  const std::int64_t mag = std::int64_t{1} << m;
  return m % 2 == 0 ? -mag : mag;
}

TraceClassSplit gauss_sum_via_trace_class(const CharacterSpec& spec,
                                          int workers) {
  require_nontrivial(spec, "trace-class route requires a nontrivial character");
  Timer t;
  const int d = spec.order();
  auto acc = trace_split_counters(spec, 1, workers);
  TraceClassSplit out{CycloSum::from_class_counts(
                          d, {acc.begin(), acc.begin() + d}),
                      CycloSum::from_class_counts(
                          d, {acc.begin() + d, acc.end()}),
                      GaussSumRecord{}};
  out.record = make_record(spec.field(), 1, SumMethod::kTraceClass,
                           out.class0 + out.class0, t.ms());
  return out;
}

GaussSumRecord gauss_sum_via_twist(const CharacterSpec& spec, FieldElement beta,
                                   int workers) {
  if (beta == 0) throw std::invalid_argument("twist requires nonzero beta");
  Timer t;
  const GaussSumRecord base = gauss_sum(spec, 1, workers);
  const int d = spec.order();
  const int k = spec.exponent(beta);
  CycloSum v = base.value.times_unit((d - k) % d);
  return make_record(spec.field(), beta, SumMethod::kTwist, std::move(v),
                     t.ms());
}

CycloSum kummer_sum(const CharacterSpec& spec, FieldElement beta, int workers) {
  require_nontrivial(spec, "kummer sum requires a nontrivial character");
  const FieldContext& ctx = spec.field();
  const int d = spec.order();
  auto acc = sweep(ctx.size(), d, workers,
                   [&](FieldElement x, std::vector<std::int64_t>& a) {
                     const int k1 = spec.exponent_fast(x);
                     if (k1 < 0) return;
                     const int k2 = spec.exponent_fast(ctx.add(x, beta));
                     if (k2 < 0) return;
                     a[(k1 + d - k2) % d] += 1;
                   });
  return CycloSum::from_class_counts(d, acc);
}

CycloSum shifted_self_sum(const CharacterSpec& spec, int workers) {
  require_nontrivial(spec, "shifted self sum requires a nontrivial character");
  const FieldContext& ctx = spec.field();
  const int d = spec.order();
  auto acc = sweep(ctx.size(), d, workers,
                   [&](FieldElement x, std::vector<std::int64_t>& a) {
                     const int k1 = spec.exponent_fast(x);
                     if (k1 < 0) return;
                     const int k2 = spec.exponent_fast(ctx.add(x, 1));
                     if (k2 < 0) return;
                     a[(k1 + k2) % d] += 1;
                   });
  return CycloSum::from_class_counts(d, acc);
}

CycloSum a_sum(const CharacterSpec& spec, FieldElement alpha) {
  const FieldContext& ctx = spec.field();
  if (ctx.degree() % 2 != 0)
    throw std::domain_error("subfield sum requires even degree");
  const int m = ctx.degree() / 2;
  if (ctx.relative_trace(alpha, m) != 1)
    throw std::invalid_argument("alpha must have relative trace 1");
  const int d = spec.order();
  std::vector<std::int64_t> counts(d, 0);
  for (FieldElement z : ctx.subfield_elements(m)) {
    const int k = spec.exponent_fast(ctx.add(z, alpha));
    if (k >= 0) counts[k] += 1;  // z + alpha != 0 since alpha is outside
  }
  return CycloSum::from_class_counts(d, counts);
}

MCounts m_counts(const CharacterSpec& spec, int workers) {
  const FieldContext& ctx = spec.field();
  if (ctx.degree() % 2 != 0)
    throw std::domain_error("count classification requires even degree");
  if (spec.order() != 3 || spec.trivial())
    throw std::invalid_argument("count classification requires the cubic character");
  const int m = ctx.degree() / 2;
  auto acc = sweep(ctx.size(), 3, workers,
                   [&](FieldElement y, std::vector<std::int64_t>& a) {
                     if (ctx.relative_trace(y, m) != 1) return;
                     a[spec.exponent_fast(y)] += 1;  // y != 0 here
                   });
  return MCounts{static_cast<std::uint64_t>(acc[0]),
                 static_cast<std::uint64_t>(acc[1]),
                 static_cast<std::uint64_t>(acc[2])};
}

std::int64_t parseval_total(const CharacterSpec& spec, int workers) {
  require_nontrivial(spec, "power total requires a nontrivial character");
  if (spec.order() != 3)
    throw std::invalid_argument("power total requires the cubic character");
  const FieldContext& ctx = spec.field();
  const int d = spec.order();
  const std::int64_t size = static_cast<std::int64_t>(ctx.size());
  auto beta_norm = [&](FieldElement beta) -> std::int64_t {
    std::vector<std::int64_t> acc(2 * d, 0);
    for (std::int64_t y = 0; y < size; ++y) {
      const int k = spec.exponent_fast(static_cast<FieldElement>(y));
      if (k < 0) continue;
      acc[k + d * ctx.trace(ctx.mul(beta, static_cast<FieldElement>(y)))] += 1;
    }
    return norm(signed_counts_to_sum(d, acc).as_eisenstein());
  };
  std::int64_t total = 0;
  if (workers == 1) {
    for (std::int64_t beta = 0; beta < size; ++beta)
      total += beta_norm(static_cast<FieldElement>(beta));
    return total;
  }
  const int threads = resolve_workers(workers);
#pragma omp parallel for schedule(static) num_threads(threads) \
    reduction(+ : total)
  for (std::int64_t beta = 0; beta < size; ++beta)
    total += beta_norm(static_cast<FieldElement>(beta));
  return total;
}

FactorizationCheck degree_doubling_factorization(int m, int workers) {
  if (m < 2 || m % 2 != 0) throw std::domain_error("m must be even");
  if (2 * m > FieldContext::kMaxDegree)
    throw std::invalid_argument("doubled degree exceeds the cap");
  const FieldContext big = build_field(2 * m);
  const FieldContext small = build_field(m);
  const CharacterSpec chi_big = make_character(big, 3);
  const CharacterSpec chi_small = make_character(small, 3);
  const std::int64_t lhs = gauss_sum(chi_big, 1, workers).value.as_integer();
  const std::int64_t g_m = gauss_sum(chi_small, 1, workers).value.as_integer();
  const std::int64_t scale =
      (m / 2 % 2 == 0 ? 1 : -1) * (std::int64_t{1} << (m / 2));
  return FactorizationCheck{lhs, scale * g_m};
}

}  // namespace gf2gauss
