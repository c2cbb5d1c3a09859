#include "gf2gauss/cyclotomic.hpp"

#include <stdexcept>

namespace gf2gauss {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

CycloSum::CycloSum(int order) : order_(order), c_(std::size_t(order) - 1, 0) {
  if (!is_prime(order))
    throw std::invalid_argument("cyclotomic order must be prime");
}

CycloSum CycloSum::integer(int order, std::int64_t n) {
  CycloSum s(order);
  s.c_[0] = n;
  return s;
}

CycloSum CycloSum::unit(int order, int k) {
  std::vector<std::int64_t> counts(std::size_t(order), 0);
  counts[std::size_t(((k % order) + order) % order)] = 1;
  return from_class_counts(order, counts);
}

CycloSum CycloSum::from_class_counts(int order,
                                     const std::vector<std::int64_t>& counts) {
  CycloSum s(order);
  if (counts.size() != std::size_t(order))
    throw std::invalid_argument("class count vector has wrong length");
  // zeta^{d-1} = -(1 + zeta + ... + zeta^{d-2})
  std::int64_t top = counts[std::size_t(order) - 1];
  for (int k = 0; k + 1 < order; ++k) s.c_[std::size_t(k)] = counts[std::size_t(k)] - top;
  return s;
}

CycloSum CycloSum::from_eisenstein(Eisenstein e) {
  CycloSum s(3);
  s.c_[0] = e.a;
  s.c_[1] = e.b;
  return s;
}

CycloSum CycloSum::operator+(const CycloSum& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("cyclotomic order mismatch");
  CycloSum s(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = c_[k] + o.c_[k];
  return s;
}

CycloSum CycloSum::operator-() const {
  CycloSum s(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k] = -c_[k];
  return s;
}

CycloSum CycloSum::operator-(const CycloSum& o) const { return *this + (-o); }

CycloSum CycloSum::times_unit(int k) const {
  int d = order_;
  k = ((k % d) + d) % d;
  std::vector<std::int64_t> counts(std::size_t(d), 0);
  for (int j = 0; j + 1 < d; ++j) counts[std::size_t((j + k) % d)] += c_[std::size_t(j)];
  return from_class_counts(d, counts);
}

CycloSum CycloSum::conjugate() const {
  int d = order_;
  std::vector<std::int64_t> counts(std::size_t(d), 0);
  for (int j = 0; j + 1 < d; ++j) counts[std::size_t((d - j) % d)] += c_[std::size_t(j)];
  return from_class_counts(d, counts);
}

bool CycloSum::equals_integer(std::int64_t n) const {
  if (c_[0] != n) return false;
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

std::int64_t CycloSum::as_integer() const {
  if (!equals_integer(c_[0]))
    throw std::domain_error("cyclotomic value is not a rational integer");
  return c_[0];
}

Eisenstein CycloSum::as_eisenstein() const {
  if (order_ != 3)
    throw std::domain_error("Eisenstein view requires order 3");
  return {c_[0], c_[1]};
}

}  // namespace gf2gauss
