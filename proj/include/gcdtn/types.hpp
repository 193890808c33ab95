#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gcdtn {

// All integer arithmetic is arbitrary precision end-to-end; minors of GCD
// matrices grow multiplicatively and must never overflow silently.
using BigInt = mpz_class;

// Exact rational, always in lowest terms with denominator >= 1. mpq_class
// maintains canonical form under arithmetic; construction through
// make_rational canonicalizes explicitly.
using Rational = mpq_class;

// Singularity is a distinct failure mode from malformed shapes or domains.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A theorem-backed internal check failed. Must never fire; callers map it to
// the dedicated internal-inconsistency exit code, distinct from input errors.
class InternalCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "num/den" in lowest terms; integers print without the "/1".
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses a (possibly signed) integer; rejects garbage and empty input.
BigInt parse_bigint(std::string_view text);

// Parses x >= 1; everything the CLI reads as a vector entry goes through here.
BigInt parse_positive_bigint(std::string_view text);

// Parses "num", "num/den" or a decimal-free signed integer into a Rational.
Rational parse_rational(std::string_view text);

// Splits on commas and/or whitespace, parses each field as a positive integer.
std::vector<BigInt> parse_vector(std::string_view text);

}  // namespace gcdtn
