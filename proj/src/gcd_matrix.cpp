#include "gcdtn/gcd_matrix.hpp"

#include "gcdtn/num_theory.hpp"

namespace gcdtn {

RationalMatrix GcdMatrix::to_rational() const {
  RationalMatrix m(n(), n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) m(i, j) = Rational(at(i, j));
  return m;
}

GcdMatrix build_gcd_matrix(std::span<const BigInt> xs) {
  if (xs.empty()) throw std::invalid_argument("build_gcd_matrix: empty vector");
  GcdMatrix s;
  s.x.assign(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  s.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    s.entries[i * n + i] = xs[i];  // gcd(x, x) = x; also rejects x < 1
    if (xs[i] < 1) throw std::invalid_argument("build_gcd_matrix: entries must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      BigInt g = gcd(xs[i], xs[j]);
      s.entries[i * n + j] = g;
      s.entries[j * n + i] = g;
    }
  }
  return s;
}

std::vector<BigInt> BeslinFactorization::product() const {
  std::vector<BigInt> out(n * n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < m; ++k)
        if (incidence[i * m + k] && incidence[j * m + k]) acc += phi[k];
      out[i * n + j] = acc;
      out[j * n + i] = acc;
    }
  return out;
}

BeslinFactorization beslin_factorization(std::span<const BigInt> xs) {
  if (xs.empty()) throw std::invalid_argument("beslin_factorization: empty vector");
  BeslinFactorization f;
  f.divisors = divisor_closure(xs);
  f.n = xs.size();
  f.m = f.divisors.size();
  f.incidence.assign(f.n * f.m, 0);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.m; ++j)
      f.incidence[i * f.m + j] =
          mpz_divisible_p(xs[i].get_mpz_t(), f.divisors[j].get_mpz_t()) ? 1 : 0;
  f.phi.reserve(f.m);
  for (const BigInt& d : f.divisors) f.phi.push_back(euler_phi(d));

  // sum over common divisors of phi(d) must reproduce gcd(x_i, x_j)
  const GcdMatrix s = build_gcd_matrix(xs);
  if (f.product() != s.entries)
    throw InternalCheckError("beslin_factorization: reconstruction mismatch");
  return f;
}

BigInt smith_determinant(unsigned n) {
  if (n < 1) throw std::invalid_argument("smith_determinant: n must be >= 1");
  BigInt prod = 1;
  for (unsigned k = 1; k <= n; ++k) prod *= euler_phi(k);
  return prod;
}

bool is_positive_definite(const GcdMatrix& s) {
  const RationalMatrix m = s.to_rational();
  std::vector<std::size_t> lead;
  lead.reserve(s.n());
  for (std::size_t k = 0; k < s.n(); ++k) {
    lead.push_back(k);
    if (minor_det(m, lead, lead) <= 0) return false;
  }
  return true;
}

}  // namespace gcdtn
