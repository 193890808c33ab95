#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gcdtn/types.hpp"

namespace gcdtn {

// Sparse prime factorization: primes strictly increasing, exponents >= 1.
// reconstruct() of the empty list is 1.
struct PrimeFactorization {
  std::vector<std::pair<BigInt, unsigned>> factors;

  BigInt reconstruct() const;
  unsigned exponent(const BigInt& p) const;  // 0 when p is not a factor
};

// gcd of positive integers; zero or negative input is rejected.
BigInt gcd(const BigInt& a, const BigInt& b);

// Left fold of gcd over a nonempty list (order-independent).
BigInt gcd_many(std::span<const BigInt> xs);

// Trial division up to sqrt(x); fine at the scales this library targets.
PrimeFactorization factorize(const BigInt& x);

bool is_prime(const BigInt& p);

// Exact power of the prime p dividing x (0 when p does not divide x).
unsigned exponent_of(const BigInt& x, const BigInt& p);

// Euler's totient, computed from the factorization.
BigInt euler_phi(const BigInt& x);

// Sorted, duplicate-free list of every divisor of every element of X.
std::vector<BigInt> divisor_closure(std::span<const BigInt> xs);

std::vector<BigInt> divisors_of(const BigInt& x);

// The k smallest primes, 2, 3, 5, ...
std::vector<BigInt> first_primes(std::size_t k);

}  // namespace gcdtn
