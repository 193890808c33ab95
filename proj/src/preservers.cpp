#include "gcdtn/preservers.hpp"

#include "gcdtn/green.hpp"
#include "gcdtn/num_theory.hpp"
#include "gcdtn/tn.hpp"

namespace gcdtn {

namespace {

BigInt sigma0(const BigInt& n) { return BigInt(divisors_of(n).size()); }

BigInt sigma1(const BigInt& n) {
  BigInt acc = 0;
  for (const BigInt& d : divisors_of(n)) acc += d;
  return acc;
}

std::vector<ArithmeticFunction> build_registry() {
  // Unbounded in practice; the bound exists so the domain check is testable.
  const BigInt big = BigInt(1) << 64;
  std::vector<ArithmeticFunction> fns;
  fns.push_back({"phi", [](const BigInt& n) { return Rational(euler_phi(n)); }, big});
  fns.push_back({"identity", [](const BigInt& n) { return Rational(n); }, big});
  fns.push_back({"one", [](const BigInt&) { return Rational(1); }, big});
  fns.push_back({"square", [](const BigInt& n) { return Rational(n * n); }, big});
  fns.push_back({"cube", [](const BigInt& n) { return Rational(n * n * n); }, big});
  fns.push_back({"sigma0", [](const BigInt& n) { return Rational(sigma0(n)); }, big});
  fns.push_back({"sigma1", [](const BigInt& n) { return Rational(sigma1(n)); }, big});
  // Hypothesis-violating probes.
  fns.push_back({"nplus1", [](const BigInt& n) { return Rational(n + 1); }, big});
  fns.push_back({"reciprocal", [](const BigInt& n) { return make_rational(1, n); }, big});
  return fns;
}

}  // namespace

const std::vector<ArithmeticFunction>& function_registry() {
  static const std::vector<ArithmeticFunction> registry = build_registry();
  return registry;
}

const ArithmeticFunction& function_by_name(const std::string& name) {
  for (const ArithmeticFunction& f : function_registry())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown arithmetic function '" + name + "'");
}

HypothesisResult is_multiplicative(const ArithmeticFunction& f, const BigInt& bound) {
  if (bound > f.domain_bound)
    throw std::invalid_argument("is_multiplicative: bound exceeds declared domain");
  for (BigInt x = 1; x * x <= bound; ++x)
    for (BigInt y = x; x * y <= bound; ++y) {
      if (gcd(x, y) != 1) continue;
      if (f.eval(x * y) != f.eval(x) * f.eval(y)) return {false, PairWitness{x, y}};
    }
  return {true, std::nullopt};
}

HypothesisResult is_divisibility_monotone(const ArithmeticFunction& f, const BigInt& bound) {
  if (bound > f.domain_bound)
    throw std::invalid_argument("is_divisibility_monotone: bound exceeds declared domain");
  for (BigInt y = 1; y <= bound; ++y) {
    const Rational fy = f.eval(y);
    for (const BigInt& x : divisors_of(y))
      if (f.eval(x) > fy) return {false, PairWitness{x, y}};
  }
  return {true, std::nullopt};
}

RationalMatrix apply_entrywise(const ArithmeticFunction& f, const GcdMatrix& s) {
  const std::size_t n = s.n();
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (s.at(i, j) > f.domain_bound)
        throw std::domain_error("apply_entrywise: entry exceeds domain bound of " + f.name);
      Rational v = f.eval(s.at(i, j));
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

PreserverVerdict preserver_verdict(const ArithmeticFunction& f, std::span<const BigInt> xs) {
  if (!check_condition4(xs).holds)
    throw std::domain_error("preserver_verdict: S(X) is not totally nonnegative");
  const GcdMatrix s = build_gcd_matrix(xs);

  BigInt max_entry = 1;
  for (const BigInt& v : s.entries) max_entry = std::max(max_entry, v);

  PreserverVerdict v;
  v.multiplicative = is_multiplicative(f, max_entry).holds;
  v.divisibility_monotone = is_divisibility_monotone(f, max_entry).holds;
  v.theorem_applies = v.multiplicative && v.divisibility_monotone;

  MinorScanResult scan = all_minors_nonneg(apply_entrywise(f, s), s.n());
  v.transformed_tn = scan.all_nonnegative;
  if (!scan.all_nonnegative) v.witness = std::move(scan.witness);

  if (v.theorem_applies && !v.transformed_tn)
    throw InternalCheckError("preserver_verdict: hypotheses hold but " + f.name +
                           " broke total nonnegativity");
  return v;
}

bool green_factor_coprimality(std::span<const BigInt> xs) {
  const IntegerGreenFactors f = integer_green_factors(xs);
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // p and q are scaled by g; entries of value zero cannot occur since
      // every x is positive, so raw gcd on the scaled pair is safe.
      BigInt a = f.p[std::min(i, j)];
      BigInt b = f.q[std::max(i, j)];
      BigInt g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) return false;
    }
  return true;
}

}  // namespace gcdtn
