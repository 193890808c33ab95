// Timing comparisons: the OpenMP minor-scan kernel against its serial
// reference, and the O(n) closed-form tridiagonal inverse against the exact
// dense oracle inverse.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "gcdtn/gcd_matrix.hpp"
#include "gcdtn/generator.hpp"
#include "gcdtn/green.hpp"
#include "gcdtn/matrix.hpp"
#include "gcdtn/tn.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace gcdtn;

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Power-of-two chain: distinct, TN, and large enough that nothing fits in a
// machine word, which is the regime the exact paths are built for.
std::vector<BigInt> two_chain(std::size_t n) {
  std::vector<BigInt> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = BigInt(1) << i;
  return x;
}

void bench_minor_scan(std::size_t n) {
  const std::vector<BigInt> x = sample_tn(n, 3, 4, /*seed=*/7, /*distinct=*/true);
  const RationalMatrix m = build_gcd_matrix(x).to_rational();

  // TN input: both scans walk every minor of every order, no early exit.
  auto t0 = std::chrono::steady_clock::now();
  const MinorScanResult serial = all_minors_nonneg_serial(m, n);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const MinorScanResult parallel = all_minors_nonneg(m, n);
  const double t_parallel = seconds_since(t0);

  if (serial.all_nonnegative != parallel.all_nonnegative ||
      serial.witness.has_value() != parallel.witness.has_value())
    throw InternalCheckError("serial and parallel minor scans disagree");

  std::size_t minors = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t c = combinations(n, k).size();
    minors += c * c;
  }

  std::cout << "minor scan, n = " << n << " (" << minors << " minors, TN input)\n";
  std::cout << "  serial reference: " << t_serial << " s\n";
  std::cout << "  parallel kernel:  " << t_parallel << " s";
#ifdef _OPENMP
  std::cout << "  (" << omp_get_max_threads() << " threads, speedup "
            << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)";
#else
  std::cout << "  (built without OpenMP: same code path)";
#endif
  std::cout << "\n\n";
}

void bench_inverse(std::size_t closed_n, std::size_t oracle_n) {
  const std::vector<BigInt> big = two_chain(closed_n);
  auto t0 = std::chrono::steady_clock::now();
  const SymmetricTridiagonal tri = gcd_tn_inverse(big);
  const double t_closed = seconds_since(t0);

  const std::vector<BigInt> small = two_chain(oracle_n);
  const RationalMatrix s = build_gcd_matrix(small).to_rational();
  t0 = std::chrono::steady_clock::now();
  const RationalMatrix dense = invert(s);
  const double t_oracle = seconds_since(t0);

  if (tri.n() != closed_n || !is_tridiagonal_nonzero_superdiag(dense))
    throw InternalCheckError("inverse benchmark sanity checks failed");

  std::cout << "inverse paths\n";
  std::cout << "  closed form (tridiagonal), n = " << closed_n << ": " << t_closed << " s\n";
  std::cout << "  dense oracle (Gauss-Jordan), n = " << oracle_n << ": " << t_oracle << " s\n";
  std::cout << "  ratio oracle/closed: " << (t_closed > 0 ? t_oracle / t_closed : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcdtn benchmarks"};
  std::size_t scan_n = 9, closed_n = 2000, oracle_n = 200;
  app.add_option("--scan-n", scan_n, "matrix order for the minor-scan comparison");
  app.add_option("--closed-n", closed_n, "order for the closed-form inverse");
  app.add_option("--oracle-n", oracle_n, "order for the dense oracle inverse");
  CLI11_PARSE(app, argc, argv);

  try {
    bench_minor_scan(scan_n);
    bench_inverse(closed_n, oracle_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
