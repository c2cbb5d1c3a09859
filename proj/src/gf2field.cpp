#include "gf2gauss/gf2field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace gf2gauss {

namespace {

int pdeg(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t pmod(std::uint64_t a, std::uint64_t m) {
  int dm = pdeg(m);
  for (int d = pdeg(a); d >= dm; d = pdeg(a)) a ^= m << (d - dm);
  return a;
}

// Carryless product reduced mod m; operand degrees < 31 keep this in 64 bits.
std::uint64_t pmulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    b >>= 1;
  }
  return pmod(acc, m);
}

std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = pmod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Rabin test: f of degree s is irreducible iff x^{2^s} = x (mod f) and
// gcd(x^{2^{s/p}} - x, f) = 1 for every prime p dividing s.
bool is_irreducible(std::uint32_t f, int s) {
  if (pdeg(f) != s) return false;
  if (s == 1) return true;
  if (!(f & 1)) return false;  // x divides

  std::vector<int> checkpoints;
  for (const PrimePower& pp : factorize(s)) checkpoints.push_back(s / int(pp.prime));

  std::uint64_t t = 0b10;
  for (int k = 1; k <= s; ++k) {
    t = pmulmod(t, t, f);
    for (int c : checkpoints)
      if (k == c && pgcd(t ^ 0b10u, f) != 1) return false;
  }
  return t == 0b10u;
}

void check_degree(int degree) {
  if (degree < 1 || degree > FieldContext::kMaxDegree)
    throw std::invalid_argument("degree must be in [1, " +
                                std::to_string(FieldContext::kMaxDegree) + "]");
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint32_t find_irreducible(int degree) {
  check_degree(degree);
  if (degree == 1) return 0b11;
  for (std::uint32_t f = (1u << degree) | 1; f < (1u << (degree + 1)); f += 2)
    if (is_irreducible(f, degree)) return f;
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::uint32_t next_irreducible(int degree, std::uint32_t after) {
  check_degree(degree);
  if (degree == 1) return after < 0b11u ? 0b11u : 0u;
  std::uint32_t start = (after | 1) + 2;
  if (start < ((1u << degree) | 1)) start = (1u << degree) | 1;
  for (std::uint32_t f = start; f < (1u << (degree + 1)); f += 2)
    if (is_irreducible(f, degree)) return f;
  return 0;
}

FieldElement FieldContext::mul_raw(FieldElement a, FieldElement b) const {
  return FieldElement(pmulmod(a, b, modulus_));
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  k %= order_;
  if (!alog_.empty())
    return alog_[(std::uint64_t(log_[a]) * k) % order_];
  FieldElement acc = 1, base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!alog_.empty()) return alog_[(order_ - log_[a]) % order_];
  return pow(a, order_ - 1);
}

FieldElement FieldContext::frobenius(FieldElement x, unsigned k) const {
  k %= unsigned(degree_);
  if (x == 0 || k == 0) return x;
  if (!alog_.empty())
    return alog_[(std::uint64_t(log_[x]) << k) % order_];
  FieldElement t = x;
  for (unsigned j = 0; j < k; ++j) t = mul(t, t);
  return t;
}

FieldElement FieldContext::relative_trace(FieldElement x, int r) const {
  if (r < 1 || degree_ % r != 0)
    throw std::invalid_argument("relative trace: r must divide the degree");
  FieldElement acc = x, t = x;
  for (int j = 1; j < degree_ / r; ++j) {
    t = frobenius(t, unsigned(r));
    acc ^= t;
  }
  return acc;
}

std::vector<FieldElement> FieldContext::subfield_elements(int r) const {
  if (r < 1 || degree_ % r != 0)
    throw std::invalid_argument("subfield: r must divide the degree");
  std::uint32_t sub_order = (1u << r) - 1;
  std::vector<FieldElement> out;
  out.reserve(std::size_t(sub_order) + 1);
  out.push_back(0);
  // The subfield's nonzero part is the order-(2^r - 1) subgroup.
  FieldElement base = pow(generator_, order_ / sub_order);
  FieldElement cur = 1;
  for (std::uint32_t k = 0; k < sub_order; ++k) {
    out.push_back(cur);
    cur = mul(cur, base);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldContext build_field(int degree, std::uint32_t modulus,
                         FieldElement generator) {
  check_degree(degree);
  if (modulus == 0) {
    modulus = find_irreducible(degree);
  } else {
    if (pdeg(modulus) != degree)
      throw std::invalid_argument("modulus is not monic of the stated degree");
    if (!is_irreducible(modulus, degree))
      throw std::invalid_argument("modulus is reducible");
  }

  FieldContext ctx;
  ctx.degree_ = degree;
  ctx.modulus_ = modulus;
  ctx.order_ = (1u << degree) - 1;

  std::vector<PrimePower> order_factors = factorize(ctx.order_);
  auto is_primitive = [&](FieldElement g) {
    for (const PrimePower& pp : order_factors) {
      FieldElement acc = 1, base = g;
      std::uint64_t k = ctx.order_ / pp.prime;
      while (k) {
        if (k & 1) acc = ctx.mul_raw(acc, base);
        base = ctx.mul_raw(base, base);
        k >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  };

  if (generator != 0) {
    if (generator > ctx.order_ || !is_primitive(generator))
      throw std::invalid_argument("supplied generator is not primitive");
    ctx.generator_ = generator;
  } else {
    for (FieldElement g = 1;; ++g) {
      if (is_primitive(g)) {
        ctx.generator_ = g;
        break;
      }
    }
  }

  if (degree <= FieldContext::kTableDegreeLimit) {
    ctx.alog_.resize(ctx.order_);
    ctx.log_.assign(ctx.size(), 0xFFFFFFFFu);
    FieldElement cur = 1;
    for (std::uint32_t e = 0; e < ctx.order_; ++e) {
      ctx.alog_[e] = cur;
      ctx.log_[cur] = e;
      cur = ctx.mul_raw(cur, ctx.generator_);
    }
    if (cur != 1)
      throw std::logic_error("generator walk did not close");  // unreachable
  }

  // Trace is GF(2)-linear; record which basis monomials have trace 1.
  for (int i = 0; i < degree; ++i) {
    FieldElement acc = 0, t = FieldElement(1u << i);
    for (int j = 0; j < degree; ++j) {
      acc ^= t;
      t = ctx.mul_raw(t, t);
    }
    if (acc & 1u) ctx.trace_mask_ |= 1u << i;
  }
  return ctx;
}

}  // namespace gf2gauss
