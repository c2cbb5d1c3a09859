// Exact arithmetic in Z[zeta_d] for prime d, with the Eisenstein ring
// Z[omega] (d = 3) as a standalone specialization. No floating point:
// reality and equality are decided on canonical coordinates.
#pragma once

#include <cstdint>
#include <vector>

namespace gf2gauss {

// a + b*omega, omega = e^{2*pi*i/3}, reduced with omega^2 = -1 - omega.
struct Eisenstein {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend Eisenstein operator+(Eisenstein x, Eisenstein y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Eisenstein operator-(Eisenstein x, Eisenstein y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Eisenstein operator-(Eisenstein x) { return {-x.a, -x.b}; }
  friend Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(Eisenstein, Eisenstein) = default;

  bool is_real() const { return b == 0; }
};

// Conjugation sends omega to omega^2 = -1 - omega.
inline Eisenstein conj(Eisenstein x) { return {x.a - x.b, -x.b}; }
// norm(a + b*omega) = a^2 - a*b + b^2 >= 0.
inline std::int64_t norm(Eisenstein x) {
  return x.a * x.a - x.a * x.b + x.b * x.b;
}

// Element of Z[zeta_d], d prime, on the power basis 1, zeta, ..., zeta^{d-2}
// after reduction by 1 + zeta + ... + zeta^{d-1} = 0. The representation is
// canonical, so equality is coefficient equality.
class CycloSum {
public:
  explicit CycloSum(int order);  // zero; order must be prime
  static CycloSum integer(int order, std::int64_t n);
  static CycloSum unit(int order, int k);  // zeta^k
  // counts[k] copies of zeta^k for k in [0, order), reduced to the basis.
  static CycloSum from_class_counts(int order,
                                    const std::vector<std::int64_t>& counts);
  static CycloSum from_eisenstein(Eisenstein e);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  CycloSum operator+(const CycloSum& o) const;  // throws on order mismatch
  CycloSum operator-(const CycloSum& o) const;
  CycloSum operator-() const;
  bool operator==(const CycloSum&) const = default;

  CycloSum conjugate() const;       // zeta -> zeta^{-1}
  CycloSum times_unit(int k) const;  // multiply by zeta^k
  bool is_real() const { return *this == conjugate(); }
  bool equals_integer(std::int64_t n) const;
  std::int64_t as_integer() const;  // throws std::domain_error if not integral
  Eisenstein as_eisenstein() const;  // order 3 only

private:
  int order_;
  std::vector<std::int64_t> c_;
};

}  // namespace gf2gauss
