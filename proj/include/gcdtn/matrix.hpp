#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gcdtn/types.hpp"

namespace gcdtn {

// Dense row-major matrix of exact rationals. No floating point anywhere.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix transposed() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared matrix. det of the 0x0 matrix is 1.
Rational det(const RationalMatrix& m);

// Cofactor expansion, kept as an independent second determinant route.
// Exponential; meant for small n cross-checks.
Rational det_cofactor(const RationalMatrix& m);

// det of the submatrix with rows alpha, columns beta. Index sets are 0-based,
// strictly increasing, equal cardinality, in bounds. Order 0 gives 1.
Rational minor_det(const RationalMatrix& m, std::span<const std::size_t> alpha,
                   std::span<const std::size_t> beta);

// Exact inverse (Gauss-Jordan). Throws SingularMatrixError when singular,
// std::invalid_argument when not square.
RationalMatrix invert(const RationalMatrix& m);

struct MinorWitness {
  std::vector<std::size_t> alpha, beta;  // 0-based
  Rational value;

  bool operator==(const MinorWitness&) const = default;
};

struct MinorScanResult {
  bool all_nonnegative = true;
  std::optional<MinorWitness> witness;  // first violation in canonical order
};

// True iff every minor of order <= max_order is >= 0. On failure the witness
// is the first violation when enumerating orders 1..max_order ascending and
// index sets lexicographically (rows outer, columns inner).
//
// all_minors_nonneg runs the scan of each order in parallel (OpenMP) but
// reports exactly the witness of the serial reference.
MinorScanResult all_minors_nonneg(const RationalMatrix& m, std::size_t max_order);
MinorScanResult all_minors_nonneg_serial(const RationalMatrix& m, std::size_t max_order);

// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace gcdtn
