#include "gcdtn/green.hpp"

#include <algorithm>

#include "gcdtn/num_theory.hpp"

namespace gcdtn {

namespace {

// Exact TN test in O(n) gcds, so the closed-form paths stay linear. S(X) is
// TN iff the chain gcds p_i = gcd(x_i, x_n) ascend by divisibility, the
// q_i = gcd(x_1, x_i) descend by divisibility, and g x_i = p_i q_i for every
// i with g = gcd(x_1, x_n): per prime, the diagonal identity pins each
// exponent between the endpoint exponents, and the chain conditions then
// force the whole exponent sequence to be monotone. Verified against the
// other characterizations in the test suites.
bool tn_linear_check(std::span<const BigInt> xs) {
  const std::size_t n = xs.size();
  const BigInt g = gcd(xs[0], xs[n - 1]);
  std::vector<BigInt> p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = gcd(xs[i], xs[n - 1]);
    q[i] = gcd(xs[0], xs[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!mpz_divisible_p(p[i + 1].get_mpz_t(), p[i].get_mpz_t())) return false;
    if (!mpz_divisible_p(q[i].get_mpz_t(), q[i + 1].get_mpz_t())) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (g * xs[i] != p[i] * q[i]) return false;
  return true;
}

void require_tn(std::span<const BigInt> xs, const char* op) {
  if (xs.empty()) throw std::invalid_argument(std::string(op) + ": empty vector");
  if (!tn_linear_check(xs))
    throw std::domain_error(std::string(op) + ": S(X) is not totally nonnegative");
}

void validate_minor_indices(std::size_t n, std::span<const std::size_t> alpha,
                            std::span<const std::size_t> beta) {
  if (alpha.size() != beta.size() || alpha.empty())
    throw std::invalid_argument("green minor: index sets must be nonempty and of equal size");
  const auto check = [n](std::span<const std::size_t> idx) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (idx[s] >= n) throw std::invalid_argument("green minor: index out of range");
      if (s > 0 && idx[s] <= idx[s - 1])
        throw std::invalid_argument("green minor: indices must be strictly increasing");
    }
  };
  check(alpha);
  check(beta);
}

bool support_condition(std::span<const std::size_t> alpha, std::span<const std::size_t> beta) {
  for (std::size_t s = 0; s + 1 < alpha.size(); ++s)
    if (std::max(alpha[s], beta[s]) >= std::min(alpha[s + 1], beta[s + 1])) return false;
  return true;
}

void require_well_formed(const GreenForm& g, const char* op) {
  if (g.p.size() != g.q.size())
    throw std::invalid_argument(std::string(op) + ": p and q differ in length");
}

}  // namespace

RationalMatrix GreenForm::to_matrix() const {
  require_well_formed(*this, "GreenForm::to_matrix");
  RationalMatrix m(n(), n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) m(i, j) = entry(i, j);
  return m;
}

RationalMatrix SymmetricTridiagonal::to_matrix() const {
  if (n() > 0 && offdiag.size() != n() - 1)
    throw std::invalid_argument("SymmetricTridiagonal: offdiag must have length n - 1");
  RationalMatrix m(n(), n());
  for (std::size_t i = 0; i < n(); ++i) {
    m(i, i) = diag[i];
    if (i + 1 < n()) {
      m(i, i + 1) = offdiag[i];
      m(i + 1, i) = offdiag[i];
    }
  }
  return m;
}

GreenForm gcd_green_form(std::span<const BigInt> xs) {
  require_tn(xs, "gcd_green_form");
  const std::size_t n = xs.size();
  const BigInt g = gcd(xs[0], xs[n - 1]);
  GreenForm form;
  form.p.reserve(n);
  form.q.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    form.p.push_back(make_rational(gcd(xs[i], xs[n - 1]), g));
    form.q.push_back(Rational(gcd(xs[0], xs[i])));
  }
  const GcdMatrix s = build_gcd_matrix(xs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (form.entry(i, j) != Rational(s.at(i, j)))
        throw InternalCheckError("gcd_green_form: reconstruction mismatch");
  return form;
}

IntegerGreenFactors integer_green_factors(std::span<const BigInt> xs) {
  require_tn(xs, "integer_green_factors");
  const std::size_t n = xs.size();
  IntegerGreenFactors f;
  f.g = gcd(xs[0], xs[n - 1]);
  f.p.reserve(n);
  f.q.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // For TN X, gcd(x_1,x_n) = gcd(x_1,...,x_n) divides both chain gcds.
    BigInt pi = gcd(xs[i], xs[n - 1]);
    BigInt qi = gcd(xs[0], xs[i]);
    if (!mpz_divisible_p(pi.get_mpz_t(), f.g.get_mpz_t()) ||
        !mpz_divisible_p(qi.get_mpz_t(), f.g.get_mpz_t()))
      throw InternalCheckError("integer_green_factors: scale does not divide");
    f.p.push_back(pi / f.g);
    f.q.push_back(qi / f.g);
  }
  return f;
}

std::optional<GreenForm> recognize_green(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("recognize_green: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("recognize_green: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("recognize_green: matrix not symmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) == 0) return std::nullopt;  // zero entries are out of scope

  // Gauge p_1 = 1, so q_j = a_1j and p_i = a_in / q_n; the full reconstruction
  // check below makes the gauge choice observable-free.
  GreenForm form;
  form.p.assign(n, Rational(0));
  form.q.assign(n, Rational(0));
  form.p[0] = 1;
  for (std::size_t j = 0; j < n; ++j) form.q[j] = m(0, j);
  for (std::size_t i = 1; i < n; ++i) form.p[i] = m(i, n - 1) / form.q[n - 1];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (form.entry(i, j) != m(i, j)) return std::nullopt;
  return form;
}

bool green_tn_criterion(const GreenForm& g) {
  if (g.n() == 0 || g.q.size() != g.n()) return false;
  const int sign = sgn(g.p[0]);
  if (sign == 0) return false;
  for (const Rational& v : g.p)
    if (sgn(v) != sign) return false;
  for (const Rational& v : g.q)
    if (sgn(v) != sign) return false;
  for (std::size_t i = 0; i + 1 < g.n(); ++i)
    if (g.p[i] / g.q[i] > g.p[i + 1] / g.q[i + 1]) return false;
  return true;
}

Rational green_minor(const GreenForm& g, std::span<const std::size_t> alpha,
                     std::span<const std::size_t> beta) {
  require_well_formed(g, "green_minor");
  validate_minor_indices(g.n(), alpha, beta);
  if (!support_condition(alpha, beta)) return Rational(0);
  const std::size_t m = alpha.size();
  std::vector<std::size_t> k(m), l(m);
  for (std::size_t s = 0; s < m; ++s) {
    k[s] = std::min(alpha[s], beta[s]);
    l[s] = std::max(alpha[s], beta[s]);
  }
  Rational value = g.p[k[0]] * g.q[l[m - 1]];
  for (std::size_t s = 0; s + 1 < m; ++s)
    value *= g.p[k[s + 1]] * g.q[l[s]] - g.p[l[s]] * g.q[k[s + 1]];
  return value;
}

Rational gcd_tn_minor(std::span<const BigInt> xs, std::span<const std::size_t> alpha,
                      std::span<const std::size_t> beta) {
  require_tn(xs, "gcd_tn_minor");
  validate_minor_indices(xs.size(), alpha, beta);
  if (!support_condition(alpha, beta)) return Rational(0);
  const std::size_t n = xs.size();
  const std::size_t m = alpha.size();
  std::vector<std::size_t> k(m), l(m);
  for (std::size_t s = 0; s < m; ++s) {
    k[s] = std::min(alpha[s], beta[s]);
    l[s] = std::max(alpha[s], beta[s]);
  }
  const BigInt& x1 = xs[0];
  const BigInt& xn = xs[n - 1];
  BigInt num = gcd(xs[k[0]], xn) * gcd(x1, xs[l[m - 1]]);
  for (std::size_t s = 0; s + 1 < m; ++s)
    num *= gcd(xs[k[s + 1]], xn) * gcd(x1, xs[l[s]]) - gcd(xs[l[s]], xn) * gcd(x1, xs[k[s + 1]]);
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), gcd(x1, xn).get_mpz_t(), m);
  return make_rational(num, den);
}

bool is_exact_inverse(const RationalMatrix& m, const SymmetricTridiagonal& t) {
  if (!m.square() || m.rows() != t.n()) return false;
  if (t.n() > 0 && t.offdiag.size() != t.n() - 1) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = t.diag[i] * m(i, j);
      if (i > 0) acc += t.offdiag[i - 1] * m(i - 1, j);
      if (i + 1 < n) acc += t.offdiag[i] * m(i + 1, j);
      if (acc != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

SymmetricTridiagonal gcd_tn_inverse(std::span<const BigInt> xs) {
  require_tn(xs, "gcd_tn_inverse");
  const std::size_t n = xs.size();
  {
    std::vector<BigInt> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw SingularMatrixError("gcd_tn_inverse: duplicate entries make S(X) singular");
  }

  SymmetricTridiagonal inv;
  if (n == 1) {
    inv.diag.push_back(make_rational(1, xs[0]));
    return inv;
  }

  const BigInt& x1 = xs[0];
  const BigInt& xn = xs[n - 1];
  const BigInt g = gcd(x1, xn);

  // a_{i+1} = g / (gcd(x_i,x_n) gcd(x_1,x_{i+1}) - gcd(x_{i+1},x_n) gcd(x_1,x_i))
  std::vector<Rational> a(n);  // a[i] holds the paper's a_{i+1}, 1-based i
  for (std::size_t i = 1; i < n; ++i) {
    BigInt den = gcd(xs[i - 1], xn) * gcd(x1, xs[i]) - gcd(xs[i], xn) * gcd(x1, xs[i - 1]);
    if (den == 0) throw SingularMatrixError("gcd_tn_inverse: singular tridiagonal step");
    a[i] = make_rational(g, den);
  }

  inv.diag.resize(n);
  inv.offdiag.assign(a.begin() + 1, a.end());
  inv.diag[0] = -make_rational(gcd(xs[1], xn), g) * a[1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    BigInt num = gcd(xs[i - 1], xn) * gcd(x1, xs[i + 1]) - gcd(xs[i + 1], xn) * gcd(x1, xs[i - 1]);
    inv.diag[i] = -make_rational(num, g) * a[i] * a[i + 1];
  }
  inv.diag[n - 1] = -make_rational(gcd(x1, xs[n - 2]), g) * a[n - 1];
  return inv;
}

SymmetricTridiagonal green_inverse(const GreenForm& g) {
  require_well_formed(g, "green_inverse");
  const std::size_t n = g.n();
  if (n == 0) throw std::invalid_argument("green_inverse: empty form");

  SymmetricTridiagonal inv;
  if (n == 1) {
    const Rational d = g.p[0] * g.q[0];
    if (d == 0) throw SingularMatrixError("green_inverse: singular 1x1 matrix");
    inv.diag.push_back(1 / d);
    return inv;
  }

  std::vector<Rational> a(n);  // a[i] holds a_{i+1}, 1-based i
  for (std::size_t i = 1; i < n; ++i) {
    const Rational den = g.p[i - 1] * g.q[i] - g.p[i] * g.q[i - 1];
    if (den == 0) throw SingularMatrixError("green_inverse: p_i q_{i+1} - p_{i+1} q_i vanishes");
    a[i] = 1 / den;
  }

  inv.diag.resize(n);
  inv.offdiag.assign(a.begin() + 1, a.end());
  if (g.p[0] == 0) throw SingularMatrixError("green_inverse: p_1 vanishes");
  if (g.q[n - 1] == 0) throw SingularMatrixError("green_inverse: q_n vanishes");
  inv.diag[0] = -g.p[1] / (g.p[0] * (g.p[0] * g.q[1] - g.p[1] * g.q[0]));
  for (std::size_t i = 1; i + 1 < n; ++i)
    inv.diag[i] = -(g.p[i - 1] * g.q[i + 1] - g.p[i + 1] * g.q[i - 1]) * a[i] * a[i + 1];
  inv.diag[n - 1] =
      -g.q[n - 2] / (g.q[n - 1] * (g.p[n - 2] * g.q[n - 1] - g.p[n - 1] * g.q[n - 2]));
  return inv;
}

bool is_tridiagonal_nonzero_superdiag(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("is_tridiagonal_nonzero_superdiag: not square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i > j ? i - j : j - i) > 1 && m(i, j) != 0) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (m(i, i + 1) == 0) return false;
  return true;
}

}  // namespace gcdtn
