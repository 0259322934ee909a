// Times a representative certification sweep with the serial loop and with
// the OpenMP worker pool, and checks the certificates match.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "kgamma/certifier.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace kgamma;

namespace {

using Clock = std::chrono::steady_clock;

double run_sweep(bool parallel, int r_max, long* checksum) {
  const PrecisionConfig prec;
  const GridSpec grid = default_certify_grid();
  const auto t0 = Clock::now();
  long sum = 0;
  for (double k : grid.k_list) {
    KParams p(k, 2, 1);
    for (const auto& cert :
         certify_sign_pattern(ClaimId::THM1B_LCM_INVG, p, r_max, grid, prec,
                              parallel))
      sum += cert.stats.pass - cert.stats.fail + 7 * cert.stats.indeterminate;
  }
  const auto t1 = Clock::now();
  *checksum = sum;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int r_max = 6;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--rmax") && i + 1 < argc)
      r_max = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc)
      reps = std::atoi(argv[++i]);
  }

#ifdef _OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both runs are serial\n");
#endif

  long cs_serial = 0, cs_parallel = 0;
  run_sweep(false, 1, &cs_serial);  // warm up constants and node tables

  double best_serial = 1e300, best_parallel = 1e300;
  for (int i = 0; i < reps; ++i) {
    best_serial = std::min(best_serial, run_sweep(false, r_max, &cs_serial));
    best_parallel =
        std::min(best_parallel, run_sweep(true, r_max, &cs_parallel));
  }

  std::printf("serial:   %8.3f s\n", best_serial);
  std::printf("parallel: %8.3f s\n", best_parallel);
  std::printf("speedup:  %8.2fx\n", best_serial / best_parallel);
  if (cs_serial != cs_parallel) {
    std::printf("MISMATCH: serial and parallel sweeps disagree\n");
    return 1;
  }
  std::printf("verdicts identical across both paths\n");
  return 0;
}
