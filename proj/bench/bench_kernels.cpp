// Throughput comparison of the gain-evaluation kernels: serial reference
// vs the OpenMP batch path, over a realistic codebook sweep workload.
#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nfcb/search.hpp"

using namespace nfcb;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 50;
  const ArrayConfig cfg = ArrayConfig::make(256, 40e9);
  const LowerCodebook cb = make_calibrated_codebook(cfg, 512, 5);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::vector<std::complex<double>>> channels(repeats);
  for (auto& h : channels) {
    h.resize(cfg.n_w);
    for (auto& c : h) c = {dist(rng), dist(rng)};
  }

  const double evals = static_cast<double>(repeats) * cb.size();

  auto t0 = clock_type::now();
  double sink = 0.0;
  for (const auto& h : channels) sink += batch_gains_serial(cb.codewords, h)[0];
  const double serial_s = seconds_since(t0);

  t0 = clock_type::now();
  for (const auto& h : channels) sink += batch_gains(cb.codewords, h)[0];
  const double parallel_s = seconds_since(t0);

#ifdef _OPENMP
  const int workers = omp_get_max_threads();
#else
  const int workers = 1;
#endif
  std::printf("codebook %d x %d elements, %d channel sweeps (checksum %.3f)\n",
              cb.size(), cfg.n_w, repeats, sink);
  std::printf("serial   : %8.1f kevals/s  (%.3f s)\n", evals / serial_s / 1e3,
              serial_s);
  std::printf("openmp %2d: %8.1f kevals/s  (%.3f s)  speedup %.2fx\n", workers,
              evals / parallel_s / 1e3, parallel_s, serial_s / parallel_s);
  return 0;
}
