#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcdtn/types.hpp"

namespace gcdtn {

// splitmix64: tiny, seedable, identical on every platform. Distribution
// details do not matter here, reproducibility does.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // Independent child stream; forking with distinct indices is how parallel
  // corpus generation stays reproducible.
  SplitMix64 fork(std::uint64_t index) {
    return SplitMix64(next() ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  }

 private:
  std::uint64_t state_;
};

enum class Direction { NonDecreasing, NonIncreasing };

// Monotone exponent sequences, one per prime; X_i = prod p^seq_p[i] is TN
// by construction.
struct ExponentProfile {
  std::vector<BigInt> primes;                   // distinct
  std::vector<std::vector<unsigned>> sequences; // one per prime, equal length
  std::vector<Direction> directions;            // declared per prime
  std::size_t n = 0;  // explicit length; required when primes is empty

  std::size_t length() const { return sequences.empty() ? n : sequences[0].size(); }
};

// Rejects profiles violating their declared monotonicity (or ragged shapes).
std::vector<BigInt> synthesize(const ExponentProfile& profile);

// Deterministic-per-seed TN vector of length n over the first prime_count
// primes with exponents <= max_exponent. With distinct = true the first
// prime's exponents are strictly monotone, which forces distinct entries.
std::vector<BigInt> sample_tn(std::size_t n, std::size_t prime_count, unsigned max_exponent,
                              std::uint64_t seed, bool distinct = false);

// Vector whose exponent sequence is non-monotone for at least one prime,
// i.e. S(X) is verified NOT_TN. Requires n >= 3.
std::vector<BigInt> sample_non_tn(std::size_t n, std::uint64_t seed, bool distinct = false);

}  // namespace gcdtn
