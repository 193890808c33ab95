#include "gcdtn/num_theory.hpp"

#include <algorithm>
#include <set>

namespace gcdtn {

namespace {

void require_positive(const BigInt& v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1, got " + v.get_str());
}

// Fast path for word-sized inputs; the mpz path only runs for huge x.
PrimeFactorization factorize_u64(unsigned long x) {
  PrimeFactorization f;
  const auto push = [&f](unsigned long p, unsigned e) { f.factors.emplace_back(BigInt(p), e); };
  unsigned e = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++e;
  }
  if (e) push(2, e);
  for (unsigned long d = 3; d <= x / d; d += 2) {
    e = 0;
    while (x % d == 0) {
      x /= d;
      ++e;
    }
    if (e) push(d, e);
  }
  if (x > 1) push(x, 1);
  return f;
}

PrimeFactorization factorize_mpz(BigInt x) {
  PrimeFactorization f;
  const auto strip = [&x, &f](const BigInt& d) {
    unsigned e = 0;
    while (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    if (e) f.factors.emplace_back(d, e);
  };
  strip(2);
  BigInt d = 3;
  while (d * d <= x) {
    strip(d);
    d += 2;
  }
  if (x > 1) f.factors.emplace_back(x, 1);
  return f;
}

}  // namespace

BigInt PrimeFactorization::reconstruct() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

unsigned PrimeFactorization::exponent(const BigInt& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  require_positive(a, "gcd argument");
  require_positive(b, "gcd argument");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt gcd_many(std::span<const BigInt> xs) {
  if (xs.empty()) throw std::invalid_argument("gcd_many of an empty list");
  BigInt g = xs[0];
  require_positive(g, "gcd_many element");
  for (std::size_t i = 1; i < xs.size(); ++i) g = gcd(g, xs[i]);
  return g;
}

PrimeFactorization factorize(const BigInt& x) {
  require_positive(x, "factorize argument");
  if (x.fits_ulong_p()) return factorize_u64(x.get_ui());
  return factorize_mpz(x);
}

bool is_prime(const BigInt& p) {
  // 30 Miller-Rabin rounds; deterministic far past the scales used here.
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

unsigned exponent_of(const BigInt& x, const BigInt& p) {
  require_positive(x, "exponent_of argument");
  if (!is_prime(p)) throw std::invalid_argument("exponent_of: " + p.get_str() + " is not prime");
  unsigned e = 0;
  BigInt v = x;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

BigInt euler_phi(const BigInt& x) {
  require_positive(x, "euler_phi argument");
  BigInt phi = 1;
  for (const auto& [p, e] : factorize(x).factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pe * (p - 1);
  }
  return phi;
}

std::vector<BigInt> divisors_of(const BigInt& x) {
  require_positive(x, "divisors_of argument");
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factorize(x).factors) {
    const std::size_t base = divs.size();
    BigInt pe = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pe *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<BigInt> divisor_closure(std::span<const BigInt> xs) {
  if (xs.empty()) throw std::invalid_argument("divisor_closure of an empty list");
  std::set<BigInt> all;
  for (const BigInt& x : xs) {
    for (BigInt& d : divisors_of(x)) all.insert(std::move(d));
  }
  return {all.begin(), all.end()};
}

std::vector<BigInt> first_primes(std::size_t k) {
  std::vector<BigInt> primes;
  primes.reserve(k);
  BigInt p = 2;
  while (primes.size() < k) {
    primes.push_back(p);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return primes;
}

}  // namespace gcdtn
