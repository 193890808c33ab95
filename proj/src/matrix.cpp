#include "gcdtn/matrix.hpp"

#include <atomic>
#include <cstdint>

namespace gcdtn {

namespace {

void require_square(const RationalMatrix& m, const char* op) {
  if (!m.square())
    throw std::invalid_argument(std::string(op) + ": matrix is not square");
}

// Integer Bareiss elimination, destructive on z (row-major n x n).
// Row swaps only: a zero pivot column means the determinant is zero.
BigInt bareiss_det(std::vector<BigInt>& z, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (z[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && z[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(z[k * n + j], z[pivot * n + j]);
      sign = -sign;
    }
    const BigInt& pkk = z[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = z[i * n + j] * pkk - z[i * n + k] * z[k * n + j];
        mpz_divexact(z[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i * n + k] = 0;
    }
    prev = pkk;
  }
  BigInt d = z[(n - 1) * n + (n - 1)];
  return sign < 0 ? BigInt(-d) : d;
}

// Clears denominators row by row. scale[i] is the factor row i was
// multiplied with; every minor of m using rows alpha equals the integer
// minor divided by prod(scale[i] for i in alpha), and the scales are >= 1,
// so sign tests can run entirely on the integer matrix.
struct ScaledInt {
  std::vector<BigInt> z;      // rows x cols
  std::vector<BigInt> scale;  // per row
};

ScaledInt clear_denominators(const RationalMatrix& m) {
  ScaledInt s;
  s.z.resize(m.rows() * m.cols());
  s.scale.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    s.scale[i] = l;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      s.z[i * m.cols() + j] = q.get_num() * (l / q.get_den());
    }
  }
  return s;
}

BigInt int_minor(const ScaledInt& s, std::size_t cols, std::span<const std::size_t> alpha,
                 std::span<const std::size_t> beta) {
  const std::size_t k = alpha.size();
  std::vector<BigInt> sub(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sub[a * k + b] = s.z[alpha[a] * cols + beta[b]];
  return bareiss_det(sub, k);
}

Rational unscale(const ScaledInt& s, std::span<const std::size_t> alpha, const BigInt& value) {
  BigInt denom = 1;
  for (std::size_t i : alpha) denom *= s.scale[i];
  return make_rational(value, denom);
}

void validate_index_set(std::span<const std::size_t> idx, std::size_t bound, const char* name) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= bound)
      throw std::invalid_argument(std::string(name) + ": index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw std::invalid_argument(std::string(name) + ": indices must be strictly increasing");
  }
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Rational det(const RationalMatrix& m) {
  require_square(m, "det");
  ScaledInt s = clear_denominators(m);
  BigInt d = bareiss_det(s.z, m.rows());
  BigInt denom = 1;
  for (const BigInt& f : s.scale) denom *= f;
  return make_rational(d, denom);
}

Rational det_cofactor(const RationalMatrix& m) {
  require_square(m, "det_cofactor");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RationalMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    Rational term = m(0, j) * det_cofactor(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Rational minor_det(const RationalMatrix& m, std::span<const std::size_t> alpha,
                   std::span<const std::size_t> beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("minor: index sets of unequal cardinality");
  validate_index_set(alpha, m.rows(), "minor rows");
  validate_index_set(beta, m.cols(), "minor cols");
  if (alpha.empty()) return 1;
  RationalMatrix sub(alpha.size(), beta.size());
  for (std::size_t a = 0; a < alpha.size(); ++a)
    for (std::size_t b = 0; b < beta.size(); ++b) sub(a, b) = m(alpha[a], beta[b]);
  return det(sub);
}

RationalMatrix invert(const RationalMatrix& m) {
  require_square(m, "invert");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("invert: matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Rational p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || a(r, k) == 0) continue;
      const Rational f = a(r, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(k, j);
        inv(r, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    // advance to the next combination in lex order
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

namespace {

MinorScanResult scan_minors(const RationalMatrix& m, std::size_t max_order, bool parallel) {
  if (max_order > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("all_minors_nonneg: max_order exceeds matrix dimensions");
  MinorScanResult result;
  const ScaledInt s = clear_denominators(m);
  const std::size_t cols = m.cols();

  for (std::size_t k = 1; k <= max_order; ++k) {
    const auto row_sets = combinations(m.rows(), k);
    const auto col_sets = combinations(m.cols(), k);
    const std::int64_t nr = static_cast<std::int64_t>(row_sets.size());
    const std::int64_t nc = static_cast<std::int64_t>(col_sets.size());
    const std::int64_t total = nr * nc;
    std::int64_t first_bad = total;

    if (parallel) {
      std::atomic<std::int64_t> best(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad)
#endif
      for (std::int64_t f = 0; f < total; ++f) {
        if (f >= best.load(std::memory_order_relaxed)) continue;
        const auto& alpha = row_sets[static_cast<std::size_t>(f / nc)];
        const auto& beta = col_sets[static_cast<std::size_t>(f % nc)];
        if (int_minor(s, cols, alpha, beta) < 0) {
          first_bad = std::min(first_bad, f);
          std::int64_t cur = best.load(std::memory_order_relaxed);
          while (f < cur && !best.compare_exchange_weak(cur, f, std::memory_order_relaxed)) {
          }
        }
      }
    } else {
      for (std::int64_t f = 0; f < total; ++f) {
        const auto& alpha = row_sets[static_cast<std::size_t>(f / nc)];
        const auto& beta = col_sets[static_cast<std::size_t>(f % nc)];
        if (int_minor(s, cols, alpha, beta) < 0) {
          first_bad = f;
          break;
        }
      }
    }

    if (first_bad < total) {
      const auto& alpha = row_sets[static_cast<std::size_t>(first_bad / nc)];
      const auto& beta = col_sets[static_cast<std::size_t>(first_bad % nc)];
      result.all_nonnegative = false;
      result.witness =
          MinorWitness{alpha, beta, unscale(s, alpha, int_minor(s, cols, alpha, beta))};
      return result;
    }
  }
  return result;
}

}  // namespace

MinorScanResult all_minors_nonneg(const RationalMatrix& m, std::size_t max_order) {
  return scan_minors(m, max_order, true);
}

MinorScanResult all_minors_nonneg_serial(const RationalMatrix& m, std::size_t max_order) {
  return scan_minors(m, max_order, false);
}

}  // namespace gcdtn
