#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qcong/eta.hpp"
#include "qcong/series.hpp"

using namespace qcong;

namespace {

const Ring kExact = Ring::exact();

// brute-force partition count by enumeration over decreasing parts; the
// independent oracle behind the invert(f_1) examples
long count_partitions(unsigned max_part, unsigned rest) {
  if (rest == 0) return 1;
  long total = 0;
  for (unsigned p = std::min(max_part, rest); p >= 1; --p)
    total += count_partitions(p, rest - p);
  return total;
}

Series random_series(std::mt19937& rng, const Ring& ring, std::size_t n,
                     bool unit_constant = false) {
  std::vector<long long> coeffs(n);
  if (ring.is_exact()) {
    std::uniform_int_distribution<long long> d(-9, 9);
    for (auto& c : coeffs) c = d(rng);
    if (unit_constant) coeffs[0] = (rng() & 1) ? 1 : -1;
  } else {
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(ring.modulus()) - 1);
    for (auto& c : coeffs) c = d(rng);
    if (unit_constant) {
      do {
        coeffs[0] = d(rng);
      } while (std::gcd(static_cast<std::uint64_t>(coeffs[0]), ring.modulus()) != 1);
    }
  }
  return Series::from_ints(ring, coeffs);
}

}  // namespace

TEST_CASE("construction canonicalizes into the ring") {
  Series one = Series::from_ints(kExact, {1});
  CHECK(one.precision() == 1);
  CHECK(one.at(0) == 1);

  Series m7 = Series::from_ints(Ring::modular(7), {8, -1});
  CHECK(m7.at(0) == 1);
  CHECK(m7.at(1) == 6);

  CHECK_THROWS_WITH_AS(Series::from_ints(kExact, std::initializer_list<long long>{}),
                       "zero precision", std::invalid_argument);
}

TEST_CASE("cube expansion mod 2 keeps the q^3 term") {
  // exact cube read mod 2: 1 - 3q + 5q^3 - 7q^6 + 9q^10 has all-odd coefficients
  Series cube = jacobi_cube_sum(kExact, 11).reduced_mod(2);
  Series expected = Series::from_ints(Ring::modular(2), {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1});
  CHECK(cube == expected);
}

TEST_CASE("add/sub basics") {
  std::mt19937 rng(2024);
  Series a = random_series(rng, kExact, 16);
  Series zero = Series::zero(kExact, 16);
  CHECK(a + zero == a);
  Series f1 = f_ell(1, kExact, 16);
  CHECK((f1 + (-f1)).is_zero());

  Series one_minus_q = Series::from_ints(kExact, {1, -1});
  Series q = Series::from_ints(kExact, {0, 1});
  Series sum = one_minus_q + q;
  CHECK(sum.precision() == 2);
  CHECK(sum.at(0) == 1);
  CHECK(sum.at(1) == 0);

  CHECK_THROWS_AS(a + Series::zero(Ring::modular(5), 16), std::invalid_argument);
}

TEST_CASE("multiplication") {
  Series f1 = f_ell(1, kExact, 12);
  CHECK(f1 * Series::one(kExact, 12) == f1);

  // recovers the identity through an independent route
  Series recovered = f1 * f1.inverse();
  CHECK(recovered.at(0) == 1);
  CHECK(!recovered.extract_progression(1, 1).first_nonzero().has_value());

  Series sq = f1.pow(2);
  Series expected =
      Series::from_ints(kExact, {1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1});
  CHECK(first_mismatch(sq, expected) == std::nullopt);

  // precision contract: min of operands
  CHECK((f1.truncated(5) * f1).precision() == 5);
}

TEST_CASE("inversion") {
  CHECK(Series::one(kExact, 8).inverse() == Series::one(kExact, 8));

  Series p = f_ell(1, kExact, 11).inverse();
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(p.at(n) == count_partitions(n, n));
  CHECK(p.at(10) == 42);

  // f_2 is a series in q^2, so its inverse is too
  Series inv2 = f_ell(2, Ring::modular(2), 40).inverse();
  CHECK(!inv2.extract_progression(2, 1).first_nonzero().has_value());

  Series noninv = Series::from_ints(kExact, {2, 1});
  CHECK_THROWS_WITH_AS(noninv.inverse(), "not invertible", std::domain_error);
  Series noninv_m = Series::from_ints(Ring::modular(6), {3, 1});
  CHECK_THROWS_AS(noninv_m.inverse(), std::domain_error);
}

TEST_CASE("powers") {
  std::mt19937 rng(99);
  Series a = random_series(rng, Ring::modular(11), 20);
  CHECK(a.pow(0) == Series::one(Ring::modular(11), 20));

  Series cube = f_ell(1, kExact, 11).pow(3);
  Series expected = Series::from_ints(kExact, {1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9});
  CHECK(cube == expected);

  // square of f_1 agrees with f_2 mod 2
  Ring m2 = Ring::modular(2);
  CHECK(first_mismatch(f_ell(1, m2, 200).pow(2), f_ell(2, m2, 200)) == std::nullopt);
}

TEST_CASE("dilation and shifting") {
  Series f1 = f_ell(1, kExact, 30);
  CHECK(f1.dilated(1) == f1);

  Series one_plus_q = Series::from_ints(kExact, {1, 1});
  Series d = one_plus_q.dilated(3);
  CHECK(d.precision() == 4);
  CHECK(d == Series::from_ints(kExact, {1, 0, 0, 1}));

  Series p = f_ell(1, kExact, 20).inverse();
  Series even = p.dilated(2);
  for (unsigned n = 0; n < 20; ++n) {
    CHECK(even.at(2 * n) == p.at(n));
    if (2 * n + 1 < even.precision()) CHECK(even.at(2 * n + 1) == 0);
  }

  CHECK(f1.shifted(0) == f1);
  Series q5 = Series::one(kExact, 1).shifted(5);
  CHECK(q5.precision() == 6);
  CHECK(q5.at(5) == 1);
  CHECK(q5.first_nonzero() == 5);

  CHECK_THROWS_AS(f1.dilated(0), std::invalid_argument);
}

TEST_CASE("progression extraction") {
  Series f1 = f_ell(1, kExact, 25);
  CHECK(f1.extract_progression(1, 0) == f1);

  // Ramanujan: p(11n+6) vanishes mod 11
  Series p11 = f_ell(1, Ring::modular(11), 500).inverse();
  CHECK(p11.extract_progression(11, 6).is_zero());

  // the 3n+2 progression of the five-colored table vanishes mod 2
  Ring m2 = Ring::modular(2);
  Series a5 = eta_quotient({{{2, 4}, {1, -5}}}, m2, 300);
  CHECK(a5.extract_progression(3, 2).is_zero());

  CHECK_THROWS_WITH_AS(f1.extract_progression(3, 25), "empty extraction",
                       std::invalid_argument);

  // precision contract
  CHECK(f1.extract_progression(7, 3).precision() == (25 - 1 - 3) / 7 + 1);
}

TEST_CASE("reduction to a modular ring") {
  Series s = Series::from_ints(kExact, {1, -3, 0, 5});
  Series r = s.reduced_mod(7);
  CHECK(r == Series::from_ints(Ring::modular(7), {1, 4, 0, 5}));

  // independent sum-side expansion matches the reduced product side
  Series reduced = f_ell(1, kExact, 200).pow(3).reduced_mod(2);
  CHECK(first_mismatch(reduced, jacobi_cube_sum(Ring::modular(2), 200)) == std::nullopt);

  // a(3) = 16 is even
  Series a3 = eta_quotient({{{2, 2}, {1, -3}}}, kExact, 5);
  CHECK(a3.at(3) == 16);
  CHECK(a3.reduced_mod(2).at(3) == 0);

  CHECK_THROWS_AS(s.reduced_mod(1), std::invalid_argument);
  CHECK_THROWS_AS(r.reduced_mod(7), std::invalid_argument);
}

TEST_CASE("ring axioms at shared precision") {
  std::mt19937 rng(7);
  for (const Ring& ring : {kExact, Ring::modular(7), Ring::modular(8)}) {
    for (int rep = 0; rep < 40; ++rep) {
      Series a = random_series(rng, ring, 24);
      Series b = random_series(rng, ring, 24);
      Series c = random_series(rng, ring, 24);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("inverse is two-sided across 200 random unit series") {
  std::mt19937 rng(12345);
  for (int rep = 0; rep < 200; ++rep) {
    Ring ring = (rep % 2 == 0) ? kExact : Ring::modular(2 + rep % 97);
    Series a = random_series(rng, ring, 30, /*unit_constant=*/true);
    Series prod = a * a.inverse();
    CHECK(prod == Series::one(ring, 30));
    CHECK(a.inverse() * a == prod);
  }
}

TEST_CASE("pow obeys the addition law") {
  std::mt19937 rng(31337);
  for (int rep = 0; rep < 30; ++rep) {
    Ring ring = (rep % 2 == 0) ? kExact : Ring::modular(9);
    Series a = random_series(rng, ring, 18, /*unit_constant=*/true);
    std::uniform_int_distribution<long long> d(-3, 3);
    long long e1 = d(rng), e2 = d(rng);
    CHECK(a.pow(e1 + e2) == a.pow(e1) * a.pow(e2));
  }
}

TEST_CASE("extraction inverts dilation") {
  std::mt19937 rng(555);
  for (std::uint64_t t = 1; t <= 12; ++t) {
    Series a = random_series(rng, Ring::modular(13), 20);
    CHECK(a.dilated(t).extract_progression(t, 0) == a);
  }
}

TEST_CASE("reduction commutes with ring operations") {
  std::mt19937 rng(808);
  for (int rep = 0; rep < 25; ++rep) {
    Series a = random_series(rng, kExact, 20);
    Series b = random_series(rng, kExact, 20);
    for (std::uint64_t m : {2ULL, 9ULL, 11ULL}) {
      CHECK((a + b).reduced_mod(m) == a.reduced_mod(m) + b.reduced_mod(m));
      CHECK((a * b).reduced_mod(m) == a.reduced_mod(m) * b.reduced_mod(m));
    }
  }
}
