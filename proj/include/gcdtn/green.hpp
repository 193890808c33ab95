#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gcdtn/gcd_matrix.hpp"
#include "gcdtn/matrix.hpp"
#include "gcdtn/types.hpp"

namespace gcdtn {

// Single-pair form: a_ij = p_min(i,j) * q_max(i,j).
struct GreenForm {
  std::vector<Rational> p, q;

  std::size_t n() const { return p.size(); }
  Rational entry(std::size_t i, std::size_t j) const {
    return p[std::min(i, j)] * q[std::max(i, j)];
  }
  RationalMatrix to_matrix() const;
};

// Symmetric tridiagonal matrix: diag b_1..b_n, off-diagonal a_2..a_n.
struct SymmetricTridiagonal {
  std::vector<Rational> diag;
  std::vector<Rational> offdiag;  // length n-1

  std::size_t n() const { return diag.size(); }
  RationalMatrix to_matrix() const;
};

// Green form of a totally nonnegative GCD matrix:
//   p_i = gcd(x_i, x_n) / gcd(x_1, x_n),   q_j = gcd(x_1, x_j).
// Rejects vectors whose GCD matrix is not TN; the reconstruction is verified
// exactly against S(X) before returning.
GreenForm gcd_green_form(std::span<const BigInt> xs);

// Integer-scaled Green factors of a TN vector: p_i = gcd(x_i,x_n)/g and
// q_j = gcd(x_1,x_j)/g with g = gcd(x_1,x_n); g divides both for TN X.
// p is a divisibility chain upward, q downward.
struct IntegerGreenFactors {
  std::vector<BigInt> p, q;
  BigInt g;
};
IntegerGreenFactors integer_green_factors(std::span<const BigInt> xs);

// Recovers a Green form (normalized to p_1 = 1) from a symmetric matrix with
// nonzero entries, if one exists. Absence is a normal outcome.
std::optional<GreenForm> recognize_green(const RationalMatrix& m);

// Karlin's criterion: all 2n numbers share one strict sign and the ratios
// p_i/q_i are non-decreasing. Any zero entry fails the strict-sign part.
bool green_tn_criterion(const GreenForm& g);

// Closed-form minor of a Green's matrix. With k_s = min(alpha_s, beta_s) and
// l_s = max(alpha_s, beta_s), if max(alpha_s, beta_s) < min(alpha_s+1, beta_s+1)
// holds for every s, the minor is
//   p_k1 * q_lm * prod_s (p_k(s+1) q_l(s) - p_l(s) q_k(s+1));
// in all other cases it is exactly 0. Index sets are 0-based, strictly
// increasing, equal cardinality >= 1.
Rational green_minor(const GreenForm& g, std::span<const std::size_t> alpha,
                     std::span<const std::size_t> beta);

// The GCD specialization of green_minor, written directly in gcds:
//   gcd(x_k1, x_n) gcd(x_1, x_lm) / gcd(x_1, x_n)^m * prod_s det(...)
// X must be TN. Agrees exactly with green_minor over gcd_green_form and with
// the brute-force minor.
Rational gcd_tn_minor(std::span<const BigInt> xs, std::span<const std::size_t> alpha,
                      std::span<const std::size_t> beta);

// Closed-form tridiagonal inverse of S(X) for TN X with distinct entries.
// O(n) gcds and divisions; multiply-back verification is the separate
// is_exact_inverse check so this path stays linear.
SymmetricTridiagonal gcd_tn_inverse(std::span<const BigInt> xs);

// Tridiagonal inverse of a nonsingular Green's matrix. A zero value of
// p_i q_{i+1} - p_{i+1} q_i is singular and is reported as such.
SymmetricTridiagonal green_inverse(const GreenForm& g);

// Exact multiply-back check t * m == I, using the tridiagonal structure
// (O(n^2) instead of a dense O(n^3) product).
bool is_exact_inverse(const RationalMatrix& m, const SymmetricTridiagonal& t);

// M is tridiagonal and every superdiagonal entry M[i][i+1] is nonzero.
bool is_tridiagonal_nonzero_superdiag(const RationalMatrix& m);

}  // namespace gcdtn
