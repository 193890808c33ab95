#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcdtn/matrix.hpp"
#include "gcdtn/types.hpp"

namespace gcdtn {

// The symmetric matrix (gcd(x_i, x_j)) together with its defining vector.
// X keeps its given order; total nonnegativity depends on it.
struct GcdMatrix {
  std::vector<BigInt> x;
  std::vector<BigInt> entries;  // n x n row-major

  std::size_t n() const { return x.size(); }
  const BigInt& at(std::size_t i, std::size_t j) const { return entries[i * n() + j]; }
  RationalMatrix to_rational() const;
};

// Duplicates in X are allowed; the matrix is then singular but still PSD.
GcdMatrix build_gcd_matrix(std::span<const BigInt> xs);

// S(X) = E diag(phi) E^T over the divisor closure D. The square-root split
// of the diagonal is folded back into it so everything stays in integers.
struct BeslinFactorization {
  std::vector<BigInt> divisors;        // sorted divisor closure, length m
  std::vector<std::uint8_t> incidence; // n x m, incidence[i*m + j] = (d_j | x_i)
  std::vector<BigInt> phi;             // phi(d_j), length m

  std::size_t n = 0, m = 0;
  std::vector<BigInt> product() const;  // E diag(phi) E^T, n x n row-major
};

// Verified on construction: product() equals S(X) entry for entry.
BeslinFactorization beslin_factorization(std::span<const BigInt> xs);

// phi(1) phi(2) ... phi(n); equals det S((1,...,n)) exactly.
BigInt smith_determinant(unsigned n);

// All leading principal minors > 0, in exact arithmetic.
bool is_positive_definite(const GcdMatrix& s);

}  // namespace gcdtn
