// Benchmark of the OpenMP kernels against their serial references:
// breadth-first group closure and the pairwise min-distance scan.
//
//   quatgeo_bench [max-word-length] [orbit-iterations]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quatgeo/group_engine.hpp"
#include "quatgeo/heisenberg.hpp"

using namespace quatgeo;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int length = argc > 1 ? std::atoi(argv[1]) : 4;
  int iters = argc > 2 ? std::atoi(argv[2]) : 3000;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  GeneratedGroup g = gamma0_n3();
  EnumerateOptions opts;
  opts.max_word_length = length;

  std::size_t serial_count = 0, parallel_count = 0;
  double t_serial = time_ms(
      [&] { serial_count = enumerate_serial(g, opts).elements.size(); });
  double t_parallel = time_ms(
      [&] { parallel_count = enumerate_parallel(g, opts).elements.size(); });
  std::printf("closure  L=%d  elements=%zu\n", length, serial_count);
  std::printf("  serial    %9.1f ms\n", t_serial);
  std::printf("  parallel  %9.1f ms   speedup %.2fx\n", t_parallel,
              t_serial / t_parallel);
  if (serial_count != parallel_count) {
    std::printf("MISMATCH: serial %zu vs parallel %zu\n", serial_count,
                parallel_count);
    return 1;
  }

  // Orbit points of a noncommuting G2 pair with |d| = 1.
  AffineMap<double> a = AffineMap<double>::identity(2);
  a.h.at(0, 1) = Quat<double>(1.0);
  a.h.at(1, 1) = Quat<double>{std::cos(1.0), std::sin(1.0), 0, 0};
  a.t = {Quat<double>(0.0), Quat<double>(1.0)};
  AffineMap<double> b = AffineMap<double>::identity(2);
  b.h.at(1, 1) = Quat<double>::unit_j();
  b.t = {Quat<double>(0.0), Quat<double>(1.0)};

  std::vector<QVec<double>> pts;
  for (int n = 1; n <= iters; ++n)
    pts.push_back(commutator_sequence(a, b, n).act({Quat<double>(0.0),
                                                    Quat<double>(1.0)}));
  double d_serial = 0, d_parallel = 0;
  double tp_serial =
      time_ms([&] { d_serial = min_pairwise_distance(pts, false); });
  double tp_parallel =
      time_ms([&] { d_parallel = min_pairwise_distance(pts, true); });
  std::printf("pairwise N=%d  min=%.3e\n", iters, d_serial);
  std::printf("  serial    %9.1f ms\n", tp_serial);
  std::printf("  parallel  %9.1f ms   speedup %.2fx\n", tp_parallel,
              tp_serial / tp_parallel);
  if (d_serial != d_parallel) {
    std::printf("MISMATCH: serial %.17g vs parallel %.17g\n", d_serial,
                d_parallel);
    return 1;
  }
  return 0;
}
