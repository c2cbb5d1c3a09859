#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gf2gauss/cyclotomic.hpp"

using namespace gf2gauss;

TEST_CASE("Eisenstein defining relations") {
  Eisenstein omega{0, 1};
  CHECK(omega * omega == Eisenstein{-1, -1});
  CHECK(conj(omega) == Eisenstein{-1, -1});  // conj(omega) = omega^2
  CHECK(norm(Eisenstein{2, 0}) == 4);
  CHECK(norm(Eisenstein{0, 0}) == 0);
  // omega^3 = 1
  CHECK(omega * omega * omega == Eisenstein{1, 0});
}

TEST_CASE("Eisenstein norm is multiplicative and nonnegative") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 5000; ++i) {
    Eisenstein x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)};
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(norm(x) >= 0);
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(norm(x) == (x * conj(x)).a);
    CHECK((x * conj(x)).b == 0);
  }
  CHECK((norm(Eisenstein{1, 0}) == 1));
}

TEST_CASE("CycloSum construction and canonical form") {
  CHECK_THROWS_AS(CycloSum(4), std::invalid_argument);
  CHECK_THROWS_AS(CycloSum(1), std::invalid_argument);

  CycloSum z3 = CycloSum::integer(3, -1);
  CHECK(z3.equals_integer(-1));
  CHECK(z3.conjugate() == z3);  // integers fixed by conjugation

  // 1 + zeta + zeta^2 = 0 for d = 3.
  std::vector<std::int64_t> ones{1, 1, 1};
  CHECK(CycloSum::from_class_counts(3, ones).equals_integer(0));

  CycloSum zeta5 = CycloSum::unit(5, 1);
  CHECK(!zeta5.is_real());
  CHECK(zeta5.conjugate() == CycloSum::unit(5, 4));

  CHECK_THROWS_AS(CycloSum::integer(3, 1) + CycloSum::integer(5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(zeta5.as_integer(), std::domain_error);
  CHECK(CycloSum::integer(7, 9).as_integer() == 9);
}

TEST_CASE("conjugation is an involution; real values closed under add") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  for (int d : {3, 5, 7}) {
    for (int i = 0; i < 500; ++i) {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(d));
      for (auto& c : counts) c = dist(rng);
      CycloSum x = CycloSum::from_class_counts(d, counts);
      CHECK(x.conjugate().conjugate() == x);
      CycloSum re = x + x.conjugate();
      CHECK(re.is_real());
      CycloSum re2 = re + re;
      CHECK(re2.is_real());
    }
  }
}

TEST_CASE("unit rotations") {
  for (int d : {3, 5}) {
    CycloSum one = CycloSum::integer(d, 1);
    for (int k = 0; k < d; ++k) {
      CHECK(one.times_unit(k) == CycloSum::unit(d, k));
      // zeta^k * zeta^{d-k} = 1
      CHECK(CycloSum::unit(d, k).times_unit(d - k) == one);
    }
    // Full rotation is the identity.
    std::vector<std::int64_t> counts{3, -2, 1, 0, 0};
    counts.resize(std::size_t(d));
    CycloSum x = CycloSum::from_class_counts(d, counts);
    CHECK(x.times_unit(d) == x);
    CHECK(x.times_unit(1).times_unit(d - 1) == x);
  }
}

TEST_CASE("order-3 sums agree with the Eisenstein specialization") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    Eisenstein x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)};
    CycloSum cx = CycloSum::from_eisenstein(x), cy = CycloSum::from_eisenstein(y);
    CHECK(cx.as_eisenstein() == x);
    CHECK((cx + cy).as_eisenstein() == x + y);
    CHECK(cx.conjugate().as_eisenstein() == conj(x));
    CHECK(cx.is_real() == x.is_real());
    CHECK(cx.equals_integer(x.a) == (x.b == 0));
    // Multiplying by omega^k matches the unit rotation.
    Eisenstein omega{0, 1};
    Eisenstein xo = x;
    for (int k = 0; k < 3; ++k) {
      CHECK(cx.times_unit(k).as_eisenstein() == xo);
      xo = xo * omega;
    }
  }
}

TEST_CASE("class-count reduction matches direct Eisenstein accumulation") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> dist(0, 200);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::int64_t> counts{dist(rng), dist(rng), dist(rng)};
    Eisenstein direct{0, 0};
    Eisenstein omega{0, 1}, w{1, 0};
    for (int k = 0; k < 3; ++k) {
      direct = direct + Eisenstein{counts[std::size_t(k)], 0} * w;
      w = w * omega;
    }
    CHECK(CycloSum::from_class_counts(3, counts).as_eisenstein() == direct);
  }
}
