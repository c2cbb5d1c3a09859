// Multiplicative characters on GF(2^s)^* and the character sums built on
// them:
//
//   chi(g^e) = zeta_d^{e mod d}  for the canonical generator g, chi(0) = 0
//   G_s(beta, chi)   = sum_y chi(y) (-1)^{Tr(beta y)}        (Gauss sum)
//   kummer(beta)     = sum_x chi(x) conj(chi)(x + beta)
//   shifted self sum = sum_x chi(x) chi(x + 1)
//   A(alpha)         = sum_{z in GF(2^m)} chi(z + alpha)      (s = 2m)
//
// Every sum accumulates integer per-class counters and converts to a
// canonical cyclotomic value once at the end, so results are exact and
// identical for any work partition.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gf2gauss/cyclotomic.hpp"
#include "gf2gauss/gf2field.hpp"

namespace gf2gauss {

// Borrows the field it was built over; the FieldContext must outlive it.
class CharacterSpec {
public:
  static constexpr int kZero = -1;  // marker for chi(0)

  const FieldContext& field() const { return *ctx_; }
  int order() const { return order_; }
  bool trivial() const { return trivial_; }
  const std::vector<FieldElement>& root_table() const { return roots_; }

  // Exponent k in [0, d) with x^{(2^s-1)/d} = root_table[k], kZero for x = 0.
  // Decided by powering; no discrete logarithm of x is taken.
  int exponent(FieldElement x) const;

  // Same values through the per-element cache when one was built.
  int exponent_fast(FieldElement x) const {
    if (x == 0) return kZero;
    if (trivial_) return 0;
    if (!cache_.empty()) return cache_[x];
    return exponent(x);
  }

private:
  friend CharacterSpec make_character(const FieldContext&, int);
  const FieldContext* ctx_ = nullptr;
  int order_ = 3;
  bool trivial_ = false;
  std::uint32_t cofactor_ = 0;  // (2^s - 1) / d
  std::vector<FieldElement> roots_;
  std::vector<std::pair<FieldElement, int>> sorted_roots_;
  std::vector<std::uint8_t> cache_;  // exponent per nonzero element
};

// Character of prime order `order` dividing 2^s - 1. A cubic request over
// odd s yields the trivial character (every element is a cube); any other
// non-dividing order throws std::invalid_argument. The context must outlive
// the spec.
CharacterSpec make_character(const FieldContext& ctx, int order = 3);

enum class SumMethod { kBruteForce, kTraceClass, kTwist, kClosedForm };
const char* method_name(SumMethod m);

struct GaussSumRecord {
  int degree = 0;
  std::uint32_t modulus = 0;
  FieldElement generator = 0;
  FieldElement beta = 0;
  SumMethod method = SumMethod::kBruteForce;
  CycloSum value{3};
  double elapsed_ms = 0.0;
};

// workers: 0 = all available threads, 1 = the serial reference kernel,
// n > 1 = that many OpenMP threads. Results are bit-identical across all
// settings.

// sum_x chi(x): zero for a nontrivial character, 2^s - 1 for the trivial one.
CycloSum total_sum(const CharacterSpec& spec, int workers = 0);

// Brute-force G_s(beta, chi).
GaussSumRecord gauss_sum(const CharacterSpec& spec, FieldElement beta,
                         int workers = 0);

// -1 for odd s, -(-2)^{s/2} for even s.
std::int64_t gauss_sum_closed_form(int degree);

struct TraceClassSplit {
  CycloSum class0{3};  // sum of chi over Tr = 0
  CycloSum class1{3};  // sum of chi over Tr = 1
  GaussSumRecord record;  // value = 2 * class0
};
// Nontrivial characters only (throws std::domain_error otherwise).
TraceClassSplit gauss_sum_via_trace_class(const CharacterSpec& spec,
                                          int workers = 0);

// conj(chi)(beta) * G_s(1, chi); beta must be nonzero.
GaussSumRecord gauss_sum_via_twist(const CharacterSpec& spec, FieldElement beta,
                                   int workers = 0);

// sum_x chi(x) conj(chi)(x + beta); nontrivial characters only.
CycloSum kummer_sum(const CharacterSpec& spec, FieldElement beta,
                    int workers = 0);

// sum_x chi(x) chi(x + 1); nontrivial characters only.
CycloSum shifted_self_sum(const CharacterSpec& spec, int workers = 0);

// sum over the index-2 subfield of chi(z + alpha); s must be even and
// alpha must have relative trace 1 over GF(2^{s/2}).
CycloSum a_sum(const CharacterSpec& spec, FieldElement alpha);

struct MCounts {
  std::uint64_t m0 = 0, m1 = 0, m2 = 0;
};
// Classifies the relative-trace-1 elements of GF(2^{2m}) by cubic character
// exponent. Requires even degree and the cubic character.
MCounts m_counts(const CharacterSpec& spec, int workers = 0);

// sum over beta of |G(beta)|^2, each Gauss sum brute-forced; cubic
// character over even degree only.
std::int64_t parseval_total(const CharacterSpec& spec, int workers = 0);

struct FactorizationCheck {
  std::int64_t lhs = 0;  // G_{2m}(1, chi), brute force over GF(2^{2m})
  std::int64_t rhs = 0;  // (-2)^{m/2} * G_m(1, chi), brute force over GF(2^m)
};
// Builds the two fields independently; m must be even, 2m within the
// degree cap.
FactorizationCheck degree_doubling_factorization(int m, int workers = 0);

}  // namespace gf2gauss
