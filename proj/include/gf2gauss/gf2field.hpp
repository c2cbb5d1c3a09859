// Binary field GF(2^s) construction and arithmetic on bitmask-encoded
// polynomials. Bit i of an element is the coefficient of x^i.
#pragma once

#include <cstdint>
#include <vector>

namespace gf2gauss {

// Polynomial over GF(2) of degree < s, packed into a bitmask.
using FieldElement = std::uint32_t;

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

// Trial-division factorization; n <= 2^30 keeps this instant.
std::vector<PrimePower> factorize(std::uint64_t n);

// Smallest-bitmask monic irreducible polynomial of the given degree.
// Degree 1 returns x+1 (0b11) so the quotient carries the standard
// GF(2) encoding. Throws std::invalid_argument outside [1, 30].
std::uint32_t find_irreducible(int degree);

// Smallest monic irreducible of the given degree with bitmask > after,
// or 0 if none exists. Used to rerun identities under a second modulus.
std::uint32_t next_irreducible(int degree, std::uint32_t after);

class FieldContext {
public:
  static constexpr int kMaxDegree = 30;
  // log/antilog tables are built up to this degree; above it mul falls
  // back to shift-reduce carryless multiplication.
  static constexpr int kTableDegreeLimit = 20;

  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }
  std::uint32_t order() const { return order_; }  // 2^s - 1
  std::uint64_t size() const { return std::uint64_t(order_) + 1; }
  bool has_tables() const { return !alog_.empty(); }

  FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    if (!alog_.empty()) {
      std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
      if (e >= order_) e -= order_;
      return alog_[e];
    }
    return mul_raw(a, b);
  }
  FieldElement pow(FieldElement a, std::uint64_t k) const;
  FieldElement inv(FieldElement a) const;  // throws std::domain_error on 0

  // Tr_s(x) = sum of x^{2^j}; GF(2)-linear, so one mask + parity.
  int trace(FieldElement x) const {
    return __builtin_parity(x & trace_mask_);
  }
  // Tr_{s/r}(x) = sum of x^{2^{rj}}, landing in GF(2^r). r must divide s.
  FieldElement relative_trace(FieldElement x, int r) const;
  // The 2^r fixed points of x -> x^{2^r}, ascending. r must divide s.
  std::vector<FieldElement> subfield_elements(int r) const;
  FieldElement frobenius(FieldElement x, unsigned k) const;

  // Exposed for kernels that walk the multiplicative group: g^e.
  FieldElement antilog(std::uint32_t e) const { return alog_[e]; }

private:
  friend FieldContext build_field(int, std::uint32_t, FieldElement);
  FieldContext() = default;

  FieldElement mul_raw(FieldElement a, FieldElement b) const;

  int degree_ = 0;
  std::uint32_t modulus_ = 0;
  FieldElement generator_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint32_t> log_;   // log_[x], x nonzero
  std::vector<std::uint32_t> alog_;  // alog_[e] = g^e, e in [0, order)
};

// Constructs GF(2^degree). A zero modulus selects find_irreducible(degree);
// a supplied modulus must be monic of that degree and irreducible. A zero
// generator selects the smallest-bitmask primitive element; a supplied one
// must be primitive. Throws std::invalid_argument on violations.
FieldContext build_field(int degree, std::uint32_t modulus = 0,
                         FieldElement generator = 0);

}  // namespace gf2gauss
