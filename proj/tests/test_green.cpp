#include <doctest.h>

#include <algorithm>

#include "gcdtn/generator.hpp"
#include "gcdtn/green.hpp"
#include "gcdtn/num_theory.hpp"
#include "gcdtn/tn.hpp"

using namespace gcdtn;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> vals) {
  std::vector<Rational> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

GreenForm form(std::initializer_list<long> p, std::initializer_list<long> q) {
  return GreenForm{rationals(p), rationals(q)};
}

}  // namespace

TEST_SUITE("green") {

TEST_CASE("gcd_green_form fixed examples") {
  const std::vector<BigInt> chain{1, 2, 4};
  const GreenForm g = gcd_green_form(chain);
  CHECK(g.p == rationals({1, 2, 4}));
  CHECK(g.q == rationals({1, 1, 1}));

  const std::vector<BigInt> single{42};
  const GreenForm g1 = gcd_green_form(single);
  CHECK(g1.p == rationals({1}));
  CHECK(g1.q == rationals({42}));

  const std::vector<BigInt> x624{6, 2, 4};
  const GreenForm g2 = gcd_green_form(x624);
  CHECK(g2.p == rationals({1, 1, 2}));
  CHECK(g2.q == rationals({6, 2, 2}));
  CHECK(g2.entry(0, 1) == 2);

  const std::vector<BigInt> bad{2, 3, 5};
  CHECK_THROWS_AS(gcd_green_form(bad), std::domain_error);
}

TEST_CASE("gcd_green_form reconstructs S(X) on sampled TN vectors") {
  SplitMix64 rng(9);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng.next_below(6);
    const std::vector<BigInt> x = sample_tn(n, 2 + t % 2, 3, rng.next());
    const GreenForm g = gcd_green_form(x);
    const GcdMatrix s = build_gcd_matrix(x);
    CHECK(g.to_matrix() == s.to_rational());
    // Karlin's criterion holds for every TN instance
    CHECK(green_tn_criterion(g));
  }
}

TEST_CASE("integer green factors form divisibility chains") {
  const std::vector<BigInt> x624{6, 2, 4};
  const IntegerGreenFactors f = integer_green_factors(x624);
  CHECK(f.g == 2);
  CHECK(f.p == std::vector<BigInt>{1, 1, 2});
  CHECK(f.q == std::vector<BigInt>{3, 1, 1});

  SplitMix64 rng(10);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.next_below(5);
    const std::vector<BigInt> x = sample_tn(n, 3, 3, rng.next());
    const IntegerGreenFactors g = integer_green_factors(x);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(g.p[i + 1] % g.p[i] == 0);  // p ascends by divisibility
      CHECK(g.q[i] % g.q[i + 1] == 0);  // q descends by divisibility
    }
  }
}

TEST_CASE("recognize_green") {
  const std::vector<BigInt> chain{1, 2, 4};
  const auto rec = recognize_green(build_gcd_matrix(chain).to_rational());
  REQUIRE(rec.has_value());
  CHECK(rec->p[0] == 1);
  CHECK(rec->to_matrix() == build_gcd_matrix(chain).to_rational());

  const std::vector<BigInt> bad{2, 3, 5};
  CHECK_FALSE(recognize_green(build_gcd_matrix(bad).to_rational()).has_value());

  RationalMatrix c(1, 1);
  c(0, 0) = 7;
  const auto rec1 = recognize_green(c);
  REQUIRE(rec1.has_value());
  CHECK(rec1->p == rationals({1}));
  CHECK(rec1->q == rationals({7}));

  RationalMatrix asym(2, 2);
  asym(0, 0) = 1;
  asym(0, 1) = 2;
  asym(1, 0) = 3;
  asym(1, 1) = 4;
  CHECK_THROWS_AS(recognize_green(asym), std::invalid_argument);

  CHECK_THROWS_AS(recognize_green(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("malformed green forms are rejected") {
  GreenForm ragged;
  ragged.p = rationals({1, 2});
  ragged.q = rationals({1});
  CHECK_THROWS_AS(ragged.to_matrix(), std::invalid_argument);
  const std::vector<std::size_t> one{0};
  CHECK_THROWS_AS(green_minor(ragged, one, one), std::invalid_argument);
  CHECK_THROWS_AS(green_inverse(ragged), std::invalid_argument);
  CHECK_FALSE(green_tn_criterion(ragged));
}

TEST_CASE("green_tn_criterion") {
  CHECK(green_tn_criterion(form({1, 2, 4}, {1, 1, 1})));
  CHECK_FALSE(green_tn_criterion(form({1, 1}, {1, 2})));  // ratios 1 > 1/2

  // sign-flip symmetry: (-p)(-q) = pq
  GreenForm neg = form({-1, -2, -4}, {-1, -1, -1});
  CHECK(green_tn_criterion(neg));

  CHECK_FALSE(green_tn_criterion(form({0, 1}, {1, 1})));   // zero is not a strict sign
  CHECK_FALSE(green_tn_criterion(form({1, -1}, {1, 1})));  // mixed signs
}

TEST_CASE("green_minor fixed values") {
  const std::vector<BigInt> chain{1, 2, 4};
  const GreenForm g = gcd_green_form(chain);

  const std::vector<std::size_t> i1{1};
  CHECK(green_minor(g, i1, i1) == 2);  // a_22 = p_2 q_2

  const std::vector<std::size_t> a{0, 1}, b{1, 2};
  CHECK(green_minor(g, a, b) == 0);  // support fails: max(1,2) >= min(2,3) in 1-based terms

  const std::vector<std::size_t> full{0, 1, 2};
  CHECK(green_minor(g, full, full) == 2);

  const std::vector<BigInt> chain4{1, 2, 4, 8};
  const std::vector<std::size_t> a2{0, 2}, b2{1, 3};
  CHECK(green_minor(gcd_green_form(chain4), a2, b2) == 2);
  CHECK(gcd_tn_minor(chain4, a2, b2) == 2);

  const std::vector<std::size_t> short_one{0};
  CHECK_THROWS_AS(green_minor(g, short_one, a), std::invalid_argument);
  const std::vector<std::size_t> dup{1, 1};
  CHECK_THROWS_AS(green_minor(g, dup, a), std::invalid_argument);
}

TEST_CASE("green_minor matches brute force on arbitrary green forms") {
  // Karlin's product rule is an algebraic identity for single-pair matrices;
  // it holds with or without total nonnegativity.
  SplitMix64 rng(21);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + rng.next_below(4);
    GreenForm g;
    for (std::size_t i = 0; i < n; ++i) {
      g.p.push_back(make_rational(static_cast<long>(rng.next_below(9)) - 4,
                                  1 + static_cast<long>(rng.next_below(3))));
      g.q.push_back(make_rational(static_cast<long>(rng.next_below(9)) - 4,
                                  1 + static_cast<long>(rng.next_below(3))));
    }
    const RationalMatrix m = g.to_matrix();
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& alpha : combinations(n, k))
        for (const auto& beta : combinations(n, k))
          CHECK(green_minor(g, alpha, beta) == minor_det(m, alpha, beta));
  }
}

TEST_CASE("closed-form minors equal the oracle for sampled TN vectors") {
  SplitMix64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.next_below(5);
    const std::vector<BigInt> x = sample_tn(n, 2, 3, rng.next());
    const GreenForm g = gcd_green_form(x);
    const RationalMatrix m = build_gcd_matrix(x).to_rational();
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& alpha : combinations(n, k))
        for (const auto& beta : combinations(n, k)) {
          const Rational oracle = minor_det(m, alpha, beta);
          CHECK(green_minor(g, alpha, beta) == oracle);
          CHECK(gcd_tn_minor(x, alpha, beta) == oracle);
        }
  }
}

TEST_CASE("gcd_tn_inverse fixed examples") {
  const std::vector<BigInt> chain{1, 2, 4};
  const SymmetricTridiagonal inv = gcd_tn_inverse(chain);
  CHECK(inv.diag == std::vector<Rational>{Rational(2), make_rational(3, 2), make_rational(1, 2)});
  CHECK(inv.offdiag == std::vector<Rational>{Rational(-1), make_rational(-1, 2)});
  CHECK(is_exact_inverse(build_gcd_matrix(chain).to_rational(), inv));
  CHECK(inv.to_matrix() == invert(build_gcd_matrix(chain).to_rational()));

  const std::vector<BigInt> pair{1, 2};
  const SymmetricTridiagonal inv2 = gcd_tn_inverse(pair);
  CHECK(inv2.diag == std::vector<Rational>{Rational(2), Rational(1)});
  CHECK(inv2.offdiag == std::vector<Rational>{Rational(-1)});

  const std::vector<BigInt> single{5};
  CHECK(gcd_tn_inverse(single).diag == std::vector<Rational>{make_rational(1, 5)});

  const std::vector<BigInt> dup{4, 4};
  CHECK_THROWS_AS(gcd_tn_inverse(dup), SingularMatrixError);
  const std::vector<BigInt> bad{2, 3, 5};
  CHECK_THROWS_AS(gcd_tn_inverse(bad), std::domain_error);
}

TEST_CASE("gcd_tn_inverse equals the oracle inverse on distinct TN samples") {
  SplitMix64 rng(55);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng.next_below(6);
    const std::vector<BigInt> x = sample_tn(n, 2, 4, rng.next(), /*distinct=*/true);
    const SymmetricTridiagonal closed = gcd_tn_inverse(x);
    const RationalMatrix s = build_gcd_matrix(x).to_rational();
    CHECK(closed.to_matrix() == invert(s));
    CHECK(is_exact_inverse(s, closed));
  }
}

TEST_CASE("green_inverse") {
  const GreenForm g = form({1, 2, 4}, {1, 1, 1});
  const SymmetricTridiagonal inv = green_inverse(g);
  CHECK(inv.diag == std::vector<Rational>{Rational(2), make_rational(3, 2), make_rational(1, 2)});
  CHECK(inv.offdiag == std::vector<Rational>{Rational(-1), make_rational(-1, 2)});
  CHECK(is_exact_inverse(g.to_matrix(), inv));

  const GreenForm one = form({3}, {2});
  CHECK(green_inverse(one).diag == std::vector<Rational>{make_rational(1, 6)});

  // p_1 q_2 - p_2 q_1 = 0 makes the matrix singular
  CHECK_THROWS_AS(green_inverse(form({1, 2}, {1, 2})), SingularMatrixError);

  SplitMix64 rng(60);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.next_below(6);
    const std::vector<BigInt> x = sample_tn(n, 2, 4, rng.next(), /*distinct=*/true);
    const SymmetricTridiagonal a = green_inverse(gcd_green_form(x));
    const SymmetricTridiagonal b = gcd_tn_inverse(x);
    CHECK(a.diag == b.diag);
    CHECK(a.offdiag == b.offdiag);
  }
}

TEST_CASE("is_tridiagonal_nonzero_superdiag") {
  const std::vector<BigInt> chain{1, 2, 4};
  CHECK(is_tridiagonal_nonzero_superdiag(invert(build_gcd_matrix(chain).to_rational())));

  const std::vector<BigInt> bad{2, 3, 5};
  CHECK_FALSE(is_tridiagonal_nonzero_superdiag(invert(build_gcd_matrix(bad).to_rational())));

  CHECK_FALSE(is_tridiagonal_nonzero_superdiag(RationalMatrix::identity(3)));
  CHECK(is_tridiagonal_nonzero_superdiag(RationalMatrix::identity(1)));
}

TEST_CASE("the linear TN screen agrees with condition 4, exhaustively at n = 3") {
  // gcd_green_form's precondition check is the O(n) chain/diagonal test;
  // it must accept exactly the TN vectors.
  for (unsigned a = 1; a <= 20; ++a)
    for (unsigned b = 1; b <= 20; ++b)
      for (unsigned c = 1; c <= 20; ++c) {
        const std::vector<BigInt> x{a, b, c};
        const bool tn = check_condition4(x).holds;
        bool accepted = true;
        try {
          gcd_green_form(x);
        } catch (const std::domain_error&) {
          accepted = false;
        }
        if (tn != accepted) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          REQUIRE(tn == accepted);
        }
      }
}

TEST_CASE("Green equivalence: TN iff recognizable iff tridiagonal inverse") {
  SplitMix64 rng(70);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng.next_below(6);
    std::vector<BigInt> x;
    if (t % 2 == 0) {
      x = sample_tn(n, 2, 3, rng.next(), /*distinct=*/true);
    } else {
      while (x.size() < n) {
        BigInt v = 1 + rng.next_below(200);
        if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
      }
    }
    const GcdMatrix s = build_gcd_matrix(x);
    const bool tn = is_tn(s, TnMethod::BruteForce).verdict == TnVerdict::TN;
    const bool green = recognize_green(s.to_rational()).has_value();
    const bool tri = is_tridiagonal_nonzero_superdiag(invert(s.to_rational()));
    CHECK(tn == green);
    CHECK(tn == tri);
  }
}

}  // TEST_SUITE
