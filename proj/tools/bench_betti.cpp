// Benchmark: parallel Hochster sweep against the sequential reference.
// Both engines must produce identical tables; the run aborts otherwise.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "clutter/betti.hpp"
#include "clutter/random_gen.hpp"
#include "clutter/stanley_reisner.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

}  // namespace

int main(int argc, char** argv) {
  int n = 14, d = 3, repeats = 3;
  std::uint64_t seed = 7;
  if (argc > 1) n = std::atoi(argv[1]);
  if (argc > 2) d = std::atoi(argv[2]);
  if (argc > 3) repeats = std::atoi(argv[3]);
  if (argc > 4) seed = static_cast<std::uint64_t>(std::atoll(argv[4]));
  if (n < 2 || n > 20 || d < 1 || d > n || repeats < 1) {
    std::cerr << "usage: bench_betti [n<=20] [d] [repeats] [seed]\n";
    return 2;
  }

  clb::InstanceGen gen(seed);
  clb::UniformClutter c = gen.clutter(n, d, 0.5);
  clb::Ideal ideal = clb::circuit_ideal_of_complement(c);
  clb::BettiOptions opt;
  opt.max_n = n;

  std::cout << "instance: n = " << n << ", d = " << d << ", "
            << ideal.gens().size() << " generators, 2^" << n
            << " multidegrees\n";
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  double best_serial = 1e300, best_parallel = 1e300;
  clb::BettiTable serial_table, parallel_table;
  for (int r = 0; r < repeats; ++r) {
    double t0 = now_seconds();
    serial_table = clb::betti_table_serial(ideal, clb::FieldSpec::Q(), opt);
    double t1 = now_seconds();
    parallel_table = clb::betti_table(ideal, clb::FieldSpec::Q(), opt);
    double t2 = now_seconds();
    best_serial = std::min(best_serial, t1 - t0);
    best_parallel = std::min(best_parallel, t2 - t1);
    if (!(serial_table == parallel_table)) {
      std::cerr << "ENGINE MISMATCH: parallel table differs from reference\n";
      return 1;
    }
  }

  std::cout << "serial:   " << best_serial << " s\n";
  std::cout << "parallel: " << best_parallel << " s\n";
  std::cout << "speedup:  " << best_serial / best_parallel << "x\n";
  std::cout << "tables identical across engines: yes\n";
  return 0;
}
