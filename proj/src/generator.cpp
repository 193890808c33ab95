#include "gcdtn/generator.hpp"

#include <algorithm>

#include "gcdtn/num_theory.hpp"
#include "gcdtn/tn.hpp"

namespace gcdtn {

namespace {

bool monotone_in(const std::vector<unsigned>& seq, Direction dir) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (dir == Direction::NonDecreasing && seq[i] > seq[i + 1]) return false;
    if (dir == Direction::NonIncreasing && seq[i] < seq[i + 1]) return false;
  }
  return true;
}

BigInt pow_ui(const BigInt& p, unsigned e) {
  BigInt v;
  mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), e);
  return v;
}

}  // namespace

std::vector<BigInt> synthesize(const ExponentProfile& profile) {
  if (profile.primes.size() != profile.sequences.size() ||
      profile.primes.size() != profile.directions.size())
    throw std::invalid_argument("synthesize: primes, sequences and directions must align");
  if (profile.n != 0 && !profile.sequences.empty() && profile.n != profile.sequences[0].size())
    throw std::invalid_argument("synthesize: explicit length disagrees with the sequences");
  for (std::size_t a = 0; a < profile.primes.size(); ++a) {
    if (!is_prime(profile.primes[a]))
      throw std::invalid_argument("synthesize: " + profile.primes[a].get_str() + " is not prime");
    for (std::size_t b = a + 1; b < profile.primes.size(); ++b)
      if (profile.primes[a] == profile.primes[b])
        throw std::invalid_argument("synthesize: duplicate prime");
    if (profile.sequences[a].size() != profile.length())
      throw std::invalid_argument("synthesize: ragged exponent sequences");
    if (!monotone_in(profile.sequences[a], profile.directions[a]))
      throw std::invalid_argument("synthesize: sequence not monotone in its declared direction");
  }

  const std::size_t n = profile.length();
  std::vector<BigInt> x(n, BigInt(1));
  for (std::size_t a = 0; a < profile.primes.size(); ++a)
    for (std::size_t i = 0; i < n; ++i) x[i] *= pow_ui(profile.primes[a], profile.sequences[a][i]);
  return x;
}

std::vector<BigInt> sample_tn(std::size_t n, std::size_t prime_count, unsigned max_exponent,
                              std::uint64_t seed, bool distinct) {
  if (n < 1 || prime_count < 1 || max_exponent < 1)
    throw std::invalid_argument("sample_tn: all parameters must be >= 1");
  SplitMix64 rng(seed);

  ExponentProfile profile;
  profile.primes = first_primes(prime_count);
  for (std::size_t a = 0; a < prime_count; ++a) {
    Direction dir =
        rng.next_below(2) == 0 ? Direction::NonDecreasing : Direction::NonIncreasing;
    std::vector<unsigned> seq(n);
    if (distinct && a == 0) {
      // Strictly monotone first-prime exponents make all entries distinct:
      // pick n distinct values from [0, span] and sort.
      const unsigned span = std::max<unsigned>(max_exponent, static_cast<unsigned>(n) - 1);
      std::vector<unsigned> pool(span + 1);
      for (unsigned v = 0; v <= span; ++v) pool[v] = v;
      for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.next_below(i)]);
      seq.assign(pool.begin(), pool.begin() + n);
      std::sort(seq.begin(), seq.end());
    } else {
      for (unsigned& e : seq) e = static_cast<unsigned>(rng.next_below(max_exponent + 1));
      std::sort(seq.begin(), seq.end());
    }
    if (dir == Direction::NonIncreasing) std::reverse(seq.begin(), seq.end());
    profile.sequences.push_back(std::move(seq));
    profile.directions.push_back(dir);
  }

  std::vector<BigInt> x = synthesize(profile);
  if (!is_monotone_exponents(x).monotone)
    throw InternalCheckError("sample_tn: generated vector failed the monotonicity check");
  return x;
}

std::vector<BigInt> sample_non_tn(std::size_t n, std::uint64_t seed, bool distinct) {
  if (n < 3)
    throw std::invalid_argument("sample_non_tn: n must be >= 3 (every smaller GCD matrix is TN)");
  SplitMix64 rng(seed);

  // One designated prime gets a rise-then-fall exponent pattern at a random
  // interior position; everything else is decoration.
  const std::vector<BigInt> primes = first_primes(3);
  const std::size_t peak = 1 + rng.next_below(n - 2);
  std::vector<unsigned> bad(n, 0);
  bad[peak] = 1 + static_cast<unsigned>(rng.next_below(2));

  std::vector<BigInt> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = pow_ui(primes[0], bad[i]);

  // Random monotone second prime keeps the samples from being pure powers.
  std::vector<unsigned> mono(n);
  for (unsigned& e : mono) e = static_cast<unsigned>(rng.next_below(3));
  std::sort(mono.begin(), mono.end());
  if (rng.next_below(2)) std::reverse(mono.begin(), mono.end());
  for (std::size_t i = 0; i < n; ++i) x[i] *= pow_ui(primes[1], mono[i]);

  if (distinct) {
    // A strictly increasing chain in a third prime forces distinct entries
    // without touching the designated prime's broken pattern.
    for (std::size_t i = 0; i < n; ++i) x[i] *= pow_ui(primes[2], static_cast<unsigned>(i));
  }

  const ExponentResult check = is_monotone_exponents(x);
  if (check.monotone)
    throw InternalCheckError("sample_non_tn: generated vector is unexpectedly monotone");
  if (is_tn(build_gcd_matrix(x), TnMethod::Exponents).verdict != TnVerdict::NOT_TN)
    throw InternalCheckError("sample_non_tn: verification disagreed");
  return x;
}

}  // namespace gcdtn
