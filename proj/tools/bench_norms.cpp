// Compares the serial reference and the OpenMP kernel on the norm workload:
// every b_alpha for the requested degree, cold caches for each variant.

#include "heckecenter/central.hpp"
#include "heckecenter/render.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace hecke;
using clock_ = std::chrono::steady_clock;

namespace {

double time_all_norms(int n, bool parallel) {
  clear_all_caches();
  const auto t0 = clock_::now();
  for (const auto& alpha : partitions_in_table_order(n)) {
    const Composition a(alpha.parts());
    const HeckeElement e = eta(n, a);
    const HeckeElement b =
        parallel ? relative_norm_parallel(Composition({n}), a, e)
                 : relative_norm_serial(Composition({n}), a, e);
    if (b.is_zero()) std::abort();  // keep the work observable
  }
  return std::chrono::duration<double>(clock_::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int nmax = argc > 1 ? std::atoi(argv[1]) : 6;
  std::cout << "threads available: " << parallel::max_threads() << "\n";
  std::cout << "n  serial[s]  openmp[s]  speedup\n";
  for (int n = 4; n <= nmax; ++n) {
    const double ts = time_all_norms(n, false);
    const double tp = time_all_norms(n, true);
    std::printf("%d  %9.4f  %9.4f  %6.2fx\n", n, ts, tp, tp > 0 ? ts / tp : 0.0);
  }
  // the two variants must agree exactly; spot-check the largest degree
  clear_all_caches();
  for (const auto& alpha : partitions_in_table_order(nmax)) {
    const Composition a(alpha.parts());
    const HeckeElement e = eta(nmax, a);
    if (!(relative_norm_serial(Composition({nmax}), a, e) ==
          relative_norm_parallel(Composition({nmax}), a, e))) {
      std::cerr << "MISMATCH at alpha=" << to_text(alpha) << "\n";
      return 1;
    }
  }
  std::cout << "serial and openmp results identical\n";
  return 0;
}
