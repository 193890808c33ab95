#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcdtn/gcd_matrix.hpp"
#include "gcdtn/matrix.hpp"
#include "gcdtn/types.hpp"

namespace gcdtn {

// A real-valued arithmetic function, total on [1, domain_bound].
struct ArithmeticFunction {
  std::string name;
  std::function<Rational(const BigInt&)> eval;
  BigInt domain_bound;
};

// Built-in candidates: phi, identity, square, cube, one, sigma0, sigma1,
// plus deliberate non-preservers (nplus1, reciprocal) for the harness.
const std::vector<ArithmeticFunction>& function_registry();
const ArithmeticFunction& function_by_name(const std::string& name);

struct PairWitness {
  BigInt x, y;
  bool operator==(const PairWitness&) const = default;
};

struct HypothesisResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

// f(xy) = f(x) f(y) for all coprime x, y with xy <= bound.
HypothesisResult is_multiplicative(const ArithmeticFunction& f, const BigInt& bound);

// f(x) <= f(y) for all x | y <= bound.
HypothesisResult is_divisibility_monotone(const ArithmeticFunction& f, const BigInt& bound);

// Matrix with entries f(gcd(x_i, x_j)). Entries above f's domain bound are a
// domain error.
RationalMatrix apply_entrywise(const ArithmeticFunction& f, const GcdMatrix& s);

struct PreserverVerdict {
  bool multiplicative = false;
  bool divisibility_monotone = false;
  bool theorem_applies = false;  // both hypotheses verified on the needed range
  bool transformed_tn = false;   // brute-force verdict on f(S)
  std::optional<MinorWitness> witness;  // when the transform is not TN
};

// X must be TN. When both hypotheses hold on [1, max entry], the transform is
// guaranteed TN; the brute-force scan confirms it and any contradiction is an
// internal error. Otherwise only the brute-force verdict is reported.
PreserverVerdict preserver_verdict(const ArithmeticFunction& f, std::span<const BigInt> xs);

// For TN X: the integer Green factors scaled by g = gcd(x_1,x_n) on both
// sides, gcd(x_i,x_n)/g and gcd(x_1,x_j)/g, are coprime for every i <= j.
// (With q unscaled the claim is false, e.g. X = (2,4,8), i=1, j=2.)
bool green_factor_coprimality(std::span<const BigInt> xs);

}  // namespace gcdtn
