// Times the serial reference kernels against their OpenMP counterparts.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "lapctl/graph.hpp"
#include "lapctl/jacobi.hpp"
#include "lapctl/spectral.hpp"
#include "lapctl/verify.hpp"

namespace {

template <class F>
double seconds(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count() / reps;
}

lapctl::RealMatrix random_laplacian(std::size_t n, std::mt19937_64& rng) {
  const auto g = lapctl::gen_random_connected(n, 0.3, rng);
  return lapctl::laplacian(g).cast<double>();
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %12s %12s %8s\n", "kernel", "n", "serial[s]", "parallel[s]", "ratio");

  std::mt19937_64 rng(7);
  for (std::size_t n : {32, 64, 128, 256}) {
    const auto m = random_laplacian(n, rng);
    const int reps = n <= 64 ? 10 : 2;
    const double ts = seconds([&] { lapctl::kernels::jacobi_cyclic(m); }, reps);
    const double tp = seconds([&] { lapctl::kernels::jacobi_parallel(m); }, reps);
    std::printf("%-28s %10zu %12.5f %12.5f %8.2f\n", "jacobi", n, ts, tp, ts / tp);
  }

  for (const char* suite : {"composite", "cj", "chain"}) {
    const auto cases = lapctl::verify::suite_cases(suite);
    const double ts = seconds(
        [&] { lapctl::verify::run_cases(cases, lapctl::verify::Schedule::Serial); }, 1);
    const double tp = seconds(
        [&] { lapctl::verify::run_cases(cases, lapctl::verify::Schedule::Parallel); }, 1);
    std::printf("%-28s %10zu %12.5f %12.5f %8.2f\n", (std::string("verify ") + suite).c_str(),
                cases.size(), ts, tp, ts / tp);
  }
}
