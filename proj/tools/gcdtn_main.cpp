// gcdtn: build, classify, and transform GCD matrices with exact arithmetic.
//
// Exit codes: 0 success / TN verdict, 1 definite NOT_TN verdict,
// 2 usage or input error, 3 internal inconsistency (must never fire).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gcdtn/gcd_matrix.hpp"
#include "gcdtn/generator.hpp"
#include "gcdtn/green.hpp"
#include "gcdtn/matrix.hpp"
#include "gcdtn/num_theory.hpp"
#include "gcdtn/preservers.hpp"
#include "gcdtn/report.hpp"
#include "gcdtn/tn.hpp"

namespace {

using namespace gcdtn;
using nlohmann::json;

constexpr int kExitTn = 0;
constexpr int kExitNotTn = 1;
constexpr int kExitError = 2;
constexpr int kExitInconsistent = 3;

// Brute-force minor scans stop at this order. Default: the full order for
// n <= 12, order 12 beyond that. GCDTN_MAX_MINOR_ORDER overrides; values
// below 2 are clamped to 2 so verdicts stay exact (TN2 <=> TN holds for GCD
// matrices).
std::size_t effective_minor_order(std::size_t n) {
  std::size_t cap = 12;
  if (const char* env = std::getenv("GCDTN_MAX_MINOR_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0')
      throw std::invalid_argument("GCDTN_MAX_MINOR_ORDER is not an integer");
    cap = std::max<std::size_t>(2, v);
  }
  return std::min(n, cap);
}

std::string join(std::span<const BigInt> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(xs[i]);
  }
  return out;
}

std::string join_indices_1based(std::span<const std::size_t> idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

void print_matrix(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << to_string(m(i, j));
    }
    os << '\n';
  }
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json input_to_json(std::span<const BigInt> xs) {
  json in = json::array();
  for (const BigInt& v : xs) in.push_back(to_string(v));
  return in;
}

std::string describe_witness(const TnWitness& w) {
  if (const auto* m = std::get_if<MinorWitness>(&w)) {
    return "minor rows {" + join_indices_1based(m->alpha) + "} cols {" +
           join_indices_1based(m->beta) + "} = " + to_string(m->value);
  }
  if (const auto* t = std::get_if<TripleWitness>(&w)) {
    std::string what;
    switch (t->failed) {
      case TripleWitness::Failed::GcdCollapse:
        what = "gcd(x_i,x_k) != gcd(x_i,x_j,x_k)";
        break;
      case TripleWitness::Failed::DivisibilityProduct:
        what = "x_j gcd(x_i,x_k) does not divide x_i x_k";
        break;
      case TripleWitness::Failed::ProductIdentity:
        what = "gcd(x_i,x_j) gcd(x_j,x_k) != x_j gcd(x_i,x_k)";
        break;
    }
    return "triple (i,j,k) = (" + std::to_string(t->i + 1) + "," + std::to_string(t->j + 1) +
           "," + std::to_string(t->k + 1) + "): " + what;
  }
  const auto& e = std::get<ExponentWitness>(w);
  return "prime " + to_string(e.prime) + ": exponents rise at position " +
         std::to_string(e.rise_at + 1) + " and fall at position " + std::to_string(e.fall_at + 1);
}

std::vector<BigInt> parse_tokens(const std::vector<std::string>& tokens) {
  std::string all;
  for (const std::string& t : tokens) {
    all += t;
    all += ' ';
  }
  return parse_vector(all);
}

std::vector<std::size_t> parse_index_set_1based(const std::string& text, std::size_t n,
                                                const char* what) {
  std::vector<std::size_t> out;
  for (const BigInt& v : parse_vector(text)) {
    if (v < 1 || v > n)
      throw std::invalid_argument(std::string(what) + ": index " + to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    out.push_back(v.get_ui() - 1);
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1])
      throw std::invalid_argument(std::string(what) + ": indices must be strictly increasing");
  return out;
}

struct CheckOutcome {
  CheckReport report;
  bool inconsistent = false;
  std::size_t order_cap = 0;  // nonzero when the brute-force scan was capped
  std::vector<std::pair<std::string, TnVerdict>> per_method;
};

CheckOutcome classify(const std::vector<BigInt>& x, const std::string& method_flag) {
  const auto start = std::chrono::steady_clock::now();
  const GcdMatrix s = build_gcd_matrix(x);

  CheckOutcome out;
  out.report.input = x;
  out.report.method = method_flag;

  const auto run_bruteforce = [&]() -> std::pair<TnVerdict, std::optional<TnWitness>> {
    const std::size_t order = effective_minor_order(s.n());
    if (order < s.n()) out.order_cap = order;
    MinorScanResult scan = all_minors_nonneg(s.to_rational(), order);
    if (scan.all_nonnegative) return {TnVerdict::TN, std::nullopt};
    return {TnVerdict::NOT_TN, TnWitness(std::move(*scan.witness))};
  };

  if (method_flag == "all") {
    std::optional<TnWitness> representative;  // condition 4's triple
    for (const char* name : {"tn2", "cond3", "cond4", "exponents", "green", "bruteforce"}) {
      TnVerdict v;
      std::optional<TnWitness> w;
      if (std::string_view(name) == "bruteforce") {
        std::tie(v, w) = run_bruteforce();
      } else {
        TnReport r = is_tn(s, method_from_name(name));
        v = r.verdict;
        w = std::move(r.witness);
      }
      out.per_method.emplace_back(name, v);
      if (std::string_view(name) == "cond4" && w) representative = std::move(w);
    }
    for (const auto& [name, v] : out.per_method)
      if (v != out.per_method.front().second) out.inconsistent = true;
    out.report.verdict = out.per_method.front().second;
    if (out.report.verdict == TnVerdict::NOT_TN) out.report.witness = std::move(representative);
  } else if (method_flag == "bruteforce") {
    auto [v, w] = run_bruteforce();
    out.report.verdict = v;
    out.report.witness = std::move(w);
  } else {
    TnReport r = is_tn(s, method_from_name(method_flag));
    out.report.verdict = r.verdict;
    out.report.witness = std::move(r.witness);
  }

  out.report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return out;
}

int emit_check(const CheckOutcome& out, bool json_format) {
  if (json_format) {
    json j = out.report.to_json();
    if (!out.per_method.empty()) {
      json methods;
      for (const auto& [name, v] : out.per_method) methods[name] = verdict_name(v);
      j["methods"] = methods;
    }
    if (out.order_cap) j["minor_order_cap"] = out.order_cap;
    j["consistent"] = !out.inconsistent;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "X = (" << join(out.report.input) << ")\n";
    std::cout << "verdict: " << verdict_name(out.report.verdict)
              << " (method: " << out.report.method << ")\n";
    if (out.report.witness)
      std::cout << "witness: " << describe_witness(*out.report.witness) << '\n';
    if (out.order_cap)
      std::cout << "note: brute-force minors scanned up to order " << out.order_cap << '\n';
  }
  if (out.inconsistent) {
    std::cerr << "internal inconsistency: the characterizations disagree\n";
    return kExitInconsistent;
  }
  return out.report.verdict == TnVerdict::TN ? kExitTn : kExitNotTn;
}

int cmd_check(const std::vector<std::string>& tokens, const std::string& method,
              const std::string& batch_file, bool json_format) {
  if (!batch_file.empty()) {
    std::ifstream in(batch_file);
    if (!in) throw std::invalid_argument("cannot open batch file '" + batch_file + "'");
    std::vector<std::vector<BigInt>> vectors;
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      vectors.push_back(parse_vector(line));
    }
    std::vector<CheckOutcome> outcomes(vectors.size());
    // classification is pure per line; output stays input-ordered
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < vectors.size(); ++i) outcomes[i] = classify(vectors[i], method);

    if (json_format) {
      json arr = json::array();
      for (const CheckOutcome& o : outcomes) arr.push_back(o.report.to_json());
      std::cout << arr.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        std::cout << (i + 1) << ": (" << join(outcomes[i].report.input) << ") "
                  << verdict_name(outcomes[i].report.verdict);
        if (outcomes[i].report.witness)
          std::cout << " [" << describe_witness(*outcomes[i].report.witness) << "]";
        std::cout << '\n';
      }
    }
    bool any_not_tn = false, any_inconsistent = false;
    for (const CheckOutcome& o : outcomes) {
      any_not_tn |= o.report.verdict == TnVerdict::NOT_TN;
      any_inconsistent |= o.inconsistent;
    }
    if (any_inconsistent) {
      std::cerr << "internal inconsistency: the characterizations disagree\n";
      return kExitInconsistent;
    }
    return any_not_tn ? kExitNotTn : kExitTn;
  }

  return emit_check(classify(parse_tokens(tokens), method), json_format);
}

int cmd_build(const std::vector<std::string>& tokens, bool json_format) {
  const std::vector<BigInt> x = parse_tokens(tokens);
  const GcdMatrix s = build_gcd_matrix(x);
  if (json_format) {
    json j;
    j["command"] = "build";
    j["input"] = input_to_json(x);
    j["matrix"] = matrix_to_json(s.to_rational());
    std::cout << j.dump(2) << '\n';
  } else {
    print_matrix(std::cout, s.to_rational());
  }
  return kExitTn;
}

int cmd_minor(const std::vector<std::string>& tokens, const std::string& rows,
              const std::string& cols, bool json_format) {
  const std::vector<BigInt> x = parse_tokens(tokens);
  const GcdMatrix s = build_gcd_matrix(x);
  const std::vector<std::size_t> alpha = parse_index_set_1based(rows, s.n(), "--rows");
  const std::vector<std::size_t> beta = parse_index_set_1based(cols, s.n(), "--cols");
  if (alpha.size() != beta.size())
    throw std::invalid_argument("--rows and --cols must have the same cardinality");
  if (alpha.empty()) throw std::invalid_argument("--rows and --cols must be nonempty");

  const Rational oracle = minor_det(s.to_rational(), alpha, beta);
  const bool tn = check_condition4(x).holds;
  std::optional<Rational> via_green, via_gcd;
  if (tn) {
    via_green = green_minor(gcd_green_form(x), alpha, beta);
    via_gcd = gcd_tn_minor(x, alpha, beta);
  }
  const bool mismatch = tn && (*via_green != oracle || *via_gcd != oracle);

  if (json_format) {
    json j;
    j["command"] = "minor";
    j["input"] = input_to_json(x);
    json r = json::array(), c = json::array();
    for (std::size_t i : alpha) r.push_back(i + 1);
    for (std::size_t i : beta) c.push_back(i + 1);
    j["rows"] = r;
    j["cols"] = c;
    j["tn"] = tn;
    j["oracle"] = to_string(oracle);
    j["green_closed_form"] = via_green ? json(to_string(*via_green)) : json(nullptr);
    j["gcd_closed_form"] = via_gcd ? json(to_string(*via_gcd)) : json(nullptr);
    j["agreement"] = !mismatch;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "minor rows {" << join_indices_1based(alpha) << "} cols {"
              << join_indices_1based(beta) << "} of S((" << join(x) << "))\n";
    std::cout << "oracle (fraction-free elimination): " << to_string(oracle) << '\n';
    if (tn) {
      std::cout << "closed form (Green product rule):  " << to_string(*via_green) << '\n';
      std::cout << "closed form (gcd specialization):  " << to_string(*via_gcd) << '\n';
      std::cout << (mismatch ? "MISMATCH between closed forms and oracle\n"
                             : "agreement: exact\n");
    } else {
      std::cout << "note: S(X) is not TN; closed-form minor formulas do not apply\n";
    }
  }
  if (mismatch) {
    std::cerr << "internal inconsistency: closed-form minor disagrees with the oracle\n";
    return kExitInconsistent;
  }
  return kExitTn;
}

int cmd_invert(const std::vector<std::string>& tokens, bool json_format) {
  const std::vector<BigInt> x = parse_tokens(tokens);
  const GcdMatrix s = build_gcd_matrix(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j])
        throw SingularMatrixError("S(X) is singular: duplicate entry " + to_string(x[i]));

  const bool tn = check_condition4(x).holds;
  json j;
  j["command"] = "invert";
  j["input"] = input_to_json(x);
  j["tn"] = tn;

  if (tn) {
    const SymmetricTridiagonal inv = gcd_tn_inverse(x);
    if (!is_exact_inverse(s.to_rational(), inv))
      throw InternalCheckError("closed-form inverse failed the multiplication check");
    if (json_format) {
      json diag = json::array(), off = json::array();
      for (const Rational& v : inv.diag) diag.push_back(to_string(v));
      for (const Rational& v : inv.offdiag) off.push_back(to_string(v));
      j["tridiagonal"] = json{{"diag", diag}, {"offdiag", off}};
      j["verified"] = true;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "S(X) is TN; the inverse is symmetric tridiagonal\n";
      std::cout << "diag:";
      for (const Rational& v : inv.diag) std::cout << ' ' << to_string(v);
      std::cout << "\noffdiag:";
      for (const Rational& v : inv.offdiag) std::cout << ' ' << to_string(v);
      std::cout << "\nverified: S * S^-1 = I (exact)\n";
    }
  } else {
    const RationalMatrix inv = invert(s.to_rational());
    if (inv * s.to_rational() != RationalMatrix::identity(s.n()))
      throw InternalCheckError("dense inverse failed the multiplication check");
    if (json_format) {
      j["dense"] = matrix_to_json(inv);
      j["verified"] = true;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "note: S(X) is not TN; dense exact inverse\n";
      print_matrix(std::cout, inv);
      std::cout << "verified: S * S^-1 = I (exact)\n";
    }
  }
  return kExitTn;
}

int cmd_transform(const std::vector<std::string>& tokens, const std::string& fn,
                  bool json_format) {
  const std::vector<BigInt> x = parse_tokens(tokens);
  const GcdMatrix s = build_gcd_matrix(x);
  const ArithmeticFunction& f = function_by_name(fn);
  const RationalMatrix t = apply_entrywise(f, s);

  const std::size_t order = effective_minor_order(s.n());
  const MinorScanResult scan = all_minors_nonneg(t, order);

  if (json_format) {
    json j;
    j["command"] = "transform";
    j["input"] = input_to_json(x);
    j["fn"] = fn;
    j["matrix"] = matrix_to_json(t);
    j["verdict"] = scan.all_nonnegative ? "TN" : "NOT_TN";
    if (scan.witness) j["witness"] = witness_to_json(TnWitness(*scan.witness));
    if (order < s.n()) j["minor_order_cap"] = order;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << fn << " applied entrywise to S((" << join(x) << ")):\n";
    print_matrix(std::cout, t);
    std::cout << "verdict: " << (scan.all_nonnegative ? "TN" : "NOT_TN") << '\n';
    if (scan.witness)
      std::cout << "witness: " << describe_witness(TnWitness(*scan.witness)) << '\n';
    if (order < s.n())
      std::cout << "note: brute-force minors scanned up to order " << order << '\n';
  }
  return scan.all_nonnegative ? kExitTn : kExitNotTn;
}

int cmd_generate(std::size_t n, std::size_t primes, unsigned max_exp, std::uint64_t seed,
                 bool non_tn, bool distinct, bool json_format) {
  const std::vector<BigInt> x =
      non_tn ? sample_non_tn(n, seed, distinct) : sample_tn(n, primes, max_exp, seed, distinct);
  const TnReport r = is_tn(build_gcd_matrix(x), TnMethod::BruteForce);
  const TnVerdict expected = non_tn ? TnVerdict::NOT_TN : TnVerdict::TN;
  if (r.verdict != expected)
    throw InternalCheckError("generated vector failed its own verification");

  if (json_format) {
    json j;
    j["command"] = "generate";
    j["x"] = input_to_json(x);
    j["verdict"] = verdict_name(r.verdict);
    j["seed"] = seed;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "X = (" << join(x) << ")\n";
    std::cout << "verdict: " << verdict_name(r.verdict) << " (verified by brute force)\n";
  }
  return kExitTn;
}

int cmd_smith(unsigned n, bool json_format) {
  const BigInt product = smith_determinant(n);
  std::vector<BigInt> x(n);
  for (unsigned i = 0; i < n; ++i) x[i] = i + 1;
  const Rational d = det(build_gcd_matrix(x).to_rational());
  const bool equal = d == Rational(product);

  if (json_format) {
    json j;
    j["command"] = "smith";
    j["n"] = n;
    j["phi_product"] = to_string(product);
    j["determinant"] = to_string(d);
    j["equal"] = equal;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "phi(1)...phi(" << n << ") = " << to_string(product) << " = det S((1.." << n
              << ")) = " << to_string(d) << '\n';
  }
  if (!equal) {
    std::cerr << "internal inconsistency: phi product differs from the exact determinant\n";
    return kExitInconsistent;
  }
  return kExitTn;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact total-nonnegativity toolkit for GCD matrices"};
  app.require_subcommand(1);

  std::vector<std::string> tokens;
  std::string format = "text";
  std::string method = "all";
  std::string rows, cols, fn, batch;
  std::size_t gen_n = 4, gen_primes = 2;
  unsigned gen_max_exp = 3;
  std::uint64_t gen_seed = 0;
  bool gen_non_tn = false, gen_distinct = false;
  unsigned smith_n = 1;

  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* build = app.add_subcommand("build", "print S(X)");
  build->add_option("x", tokens, "positive integers, comma or space separated")->required();
  add_format(build);

  CLI::App* check = app.add_subcommand("check", "decide total nonnegativity of S(X)");
  check->add_option("x", tokens, "positive integers");
  check->add_option("--method", method, "characterization to use")
      ->check(CLI::IsMember({"all", "tn2", "cond3", "cond4", "exponents", "green", "bruteforce"}));
  check->add_option("--batch", batch, "classify one vector per line; # starts a comment");
  add_format(check);

  CLI::App* minor = app.add_subcommand("minor", "minor of S(X), closed form vs oracle");
  minor->add_option("x", tokens)->required();
  minor->add_option("--rows", rows, "row indices, 1-based, strictly increasing")->required();
  minor->add_option("--cols", cols, "column indices, 1-based, strictly increasing")->required();
  add_format(minor);

  CLI::App* invert = app.add_subcommand("invert", "exact inverse of S(X)");
  invert->add_option("x", tokens)->required();
  add_format(invert);

  CLI::App* transform = app.add_subcommand("transform", "apply an arithmetic function entrywise");
  transform->add_option("x", tokens)->required();
  transform->add_option("--fn", fn, "function name from the registry")->required();
  add_format(transform);

  CLI::App* generate = app.add_subcommand("generate", "sample TN / non-TN vectors");
  generate->add_option("--n", gen_n, "vector length")->required();
  generate->add_option("--seed", gen_seed, "64-bit seed");
  generate->add_option("--primes", gen_primes, "number of primes used");
  generate->add_option("--max-exp", gen_max_exp, "largest exponent");
  generate->add_flag("--non-tn", gen_non_tn, "emit a verified NOT_TN vector (n >= 3)");
  generate->add_flag("--distinct", gen_distinct, "force pairwise distinct entries");
  add_format(generate);

  CLI::App* smith = app.add_subcommand("smith", "phi product vs exact determinant of S((1..n))");
  smith->add_option("n", smith_n, "matrix order")->required();
  add_format(smith);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  const bool json_format = format == "json";
  try {
    if (build->parsed()) return cmd_build(tokens, json_format);
    if (check->parsed()) {
      if (batch.empty() && tokens.empty())
        throw std::invalid_argument("check needs a vector or --batch FILE");
      if (!batch.empty() && !tokens.empty())
        throw std::invalid_argument("check takes either a vector or --batch, not both");
      return cmd_check(tokens, method, batch, json_format);
    }
    if (minor->parsed()) return cmd_minor(tokens, rows, cols, json_format);
    if (invert->parsed()) return cmd_invert(tokens, json_format);
    if (transform->parsed()) return cmd_transform(tokens, fn, json_format);
    if (generate->parsed())
      return cmd_generate(gen_n, gen_primes, gen_max_exp, gen_seed, gen_non_tn, gen_distinct,
                          json_format);
    if (smith->parsed()) return cmd_smith(smith_n, json_format);
  } catch (const InternalCheckError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
