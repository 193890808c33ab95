#include <doctest.h>

#include <algorithm>

#include "gcdtn/gcd_matrix.hpp"
#include "gcdtn/generator.hpp"
#include "gcdtn/matrix.hpp"

using namespace gcdtn;

namespace {

RationalMatrix from_ints(std::size_t n, std::initializer_list<long> vals) {
  RationalMatrix m(n, n);
  auto it = vals.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(*it++);
  return m;
}

RationalMatrix random_matrix(SplitMix64& rng, std::size_t n, bool with_denominators) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long num = static_cast<long>(rng.next_below(21)) - 10;
      const long den = with_denominators ? 1 + static_cast<long>(rng.next_below(6)) : 1;
      m(i, j) = make_rational(num, den);
    }
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("det on fixed matrices") {
  CHECK(det(RationalMatrix::identity(3)) == 1);
  CHECK(det(from_ints(2, {1, 1, 1, 2})) == 1);
  CHECK(det(RationalMatrix(0, 0)) == 1);

  const std::vector<BigInt> x{1, 2, 3};
  CHECK(det(build_gcd_matrix(x).to_rational()) == 2);

  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det with denominators and via cofactor cross-check") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.next_below(4);
    const RationalMatrix m = random_matrix(rng, n, true);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("row swap negates det") {
  SplitMix64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.next_below(4);  // n in [2,5]
    const RationalMatrix m = random_matrix(rng, n, false);
    std::size_t r1 = rng.next_below(n), r2 = rng.next_below(n);
    if (r1 == r2) r2 = (r2 + 1) % n;
    RationalMatrix swapped = m;
    for (std::size_t j = 0; j < n; ++j) std::swap(swapped(r1, j), swapped(r2, j));
    CHECK(det(swapped) == -det(m));
  }
}

TEST_CASE("minor_det basics and validation") {
  const std::vector<BigInt> x{2, 3, 5};
  const RationalMatrix s = build_gcd_matrix(x).to_rational();

  const std::vector<std::size_t> full{0, 1, 2};
  CHECK(minor_det(s, full, full) == det(s));

  const std::vector<std::size_t> r0{0}, c2{2};
  CHECK(minor_det(s, r0, c2) == s(0, 2));

  // gcd(2,3) gcd(3,5) - 3 gcd(2,5) = 1 - 3 = -2
  const std::vector<std::size_t> a{0, 1}, b{1, 2};
  CHECK(minor_det(s, a, b) == -2);

  const std::vector<std::size_t> empty;
  CHECK(minor_det(s, empty, empty) == 1);

  const std::vector<std::size_t> bad_order{1, 0};
  CHECK_THROWS_AS(minor_det(s, bad_order, a), std::invalid_argument);
  const std::vector<std::size_t> out_of_range{0, 7};
  CHECK_THROWS_AS(minor_det(s, out_of_range, a), std::invalid_argument);
  CHECK_THROWS_AS(minor_det(s, full, a), std::invalid_argument);
}

TEST_CASE("minor equals det of materialized submatrix") {
  SplitMix64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.next_below(4);
    const RationalMatrix m = random_matrix(rng, n, true);
    const std::size_t k = 1 + rng.next_below(n);
    const auto rows = combinations(n, k);
    const auto& alpha = rows[rng.next_below(rows.size())];
    const auto& beta = rows[rng.next_below(rows.size())];
    RationalMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(alpha[i], beta[j]);
    CHECK(minor_det(m, alpha, beta) == det(sub));
  }
}

TEST_CASE("invert fixed cases") {
  CHECK(invert(RationalMatrix::identity(4)) == RationalMatrix::identity(4));

  RationalMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 4;
  RationalMatrix dinv = invert(d);
  CHECK(dinv(0, 0) == make_rational(1, 2));
  CHECK(dinv(1, 1) == make_rational(1, 4));
  CHECK(dinv(0, 1) == 0);

  const std::vector<BigInt> x{1, 2, 4};
  const RationalMatrix sinv = invert(build_gcd_matrix(x).to_rational());
  RationalMatrix expected(3, 3);
  expected(0, 0) = 2;
  expected(0, 1) = -1;
  expected(1, 0) = -1;
  expected(1, 1) = make_rational(3, 2);
  expected(1, 2) = make_rational(-1, 2);
  expected(2, 1) = make_rational(-1, 2);
  expected(2, 2) = make_rational(1, 2);
  CHECK(sinv == expected);

  CHECK_THROWS_AS(invert(RationalMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(invert(from_ints(2, {1, 2, 2, 4})), SingularMatrixError);
}

TEST_CASE("invert times original is the identity") {
  SplitMix64 rng(31);
  int tested = 0;
  while (tested < 50) {
    const std::size_t n = 1 + rng.next_below(6);
    const RationalMatrix m = random_matrix(rng, n, false);
    if (det(m) == 0) continue;
    ++tested;
    CHECK(invert(m) * m == RationalMatrix::identity(n));
  }
}

TEST_CASE("all_minors_nonneg verdicts and canonical witness") {
  CHECK(all_minors_nonneg(RationalMatrix::identity(4), 4).all_nonnegative);

  const std::vector<BigInt> bad{2, 3, 5};
  const MinorScanResult r = all_minors_nonneg(build_gcd_matrix(bad).to_rational(), 2);
  REQUIRE_FALSE(r.all_nonnegative);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->alpha == std::vector<std::size_t>{0, 1});
  CHECK(r.witness->beta == std::vector<std::size_t>{1, 2});
  CHECK(r.witness->value == -2);

  const std::vector<BigInt> good{1, 2, 4};
  CHECK(all_minors_nonneg(build_gcd_matrix(good).to_rational(), 3).all_nonnegative);

  CHECK_THROWS_AS(all_minors_nonneg(RationalMatrix(2, 2), 3), std::invalid_argument);
}

TEST_CASE("parallel scan equals serial reference, witness included") {
  SplitMix64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.next_below(5);  // up to 6x6
    const RationalMatrix m = random_matrix(rng, n, t % 2 == 0);
    const MinorScanResult par = all_minors_nonneg(m, n);
    const MinorScanResult ser = all_minors_nonneg_serial(m, n);
    CHECK(par.all_nonnegative == ser.all_nonnegative);
    REQUIRE(par.witness.has_value() == ser.witness.has_value());
    if (par.witness) {
      CHECK(par.witness->alpha == ser.witness->alpha);
      CHECK(par.witness->beta == ser.witness->beta);
      CHECK(par.witness->value == ser.witness->value);
    }
  }
}

TEST_CASE("full-order scan accepts matrices built from valid single-pair data") {
  // p, q positive with nondecreasing p/q ratios: every minor is nonnegative
  SplitMix64 rng(271);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.next_below(5);
    std::vector<Rational> ratios;
    for (std::size_t i = 0; i < n; ++i)
      ratios.push_back(make_rational(1 + rng.next_below(12), 1 + rng.next_below(12)));
    std::sort(ratios.begin(), ratios.end());
    RationalMatrix m(n, n);
    std::vector<Rational> p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = Rational(1 + static_cast<long>(rng.next_below(9)));
      p[i] = ratios[i] * q[i];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = p[std::min(i, j)] * q[std::max(i, j)];
    CHECK(all_minors_nonneg(m, n).all_nonnegative);
  }
}

TEST_CASE("combinations are lexicographic") {
  const auto c = combinations(4, 2);
  const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3},
                                                       {1, 2}, {1, 3}, {2, 3}};
  CHECK(c == expected);
  CHECK(combinations(3, 0) == std::vector<std::vector<std::size_t>>{{}});
  CHECK(combinations(2, 3).empty());
}

}  // TEST_SUITE
