// Compares the OpenMP sumset kernel against a single-thread run and the
// naive sparse reference.  Results are checked for equality before timings
// are reported.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "conedens/pointset.hpp"
#include "conedens/setgen.hpp"
#include "reference/reference.hpp"

using namespace conedens;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void bench_case(const char* label, const Box& box, const Rational& p,
                std::uint64_t seed, int reps, bool run_naive) {
  const PointSet a = random_pointset(box, p, seed, false);
  const PointSet b = random_pointset(box, p, seed + 1, false);

  PointSet par = sumset(a, b);

  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  PointSet ser = sumset(a, b);
  omp_set_num_threads(threads);

  if (!(par == ser)) {
    std::fprintf(stderr, "%s: parallel and serial kernels disagree\n", label);
    std::exit(1);
  }
  double naive_ms = -1;
  if (run_naive) {
    const PointSet nv = reference::sumset_naive(a, b);
    if (!(par == nv)) {
      std::fprintf(stderr, "%s: kernel and naive reference disagree\n", label);
      std::exit(1);
    }
    naive_ms = time_ms([&] { reference::sumset_naive(a, b); }, 1);
  }

  const double par_ms = time_ms([&] { sumset(a, b); }, reps);
  omp_set_num_threads(1);
  const double ser_ms = time_ms([&] { sumset(a, b); }, reps);
  omp_set_num_threads(threads);

  std::printf("%-28s |A|=%-7llu kernel(%d thr) %9.3f ms  kernel(1 thr) %9.3f ms",
              label, static_cast<unsigned long long>(a.cardinality()), threads,
              par_ms, ser_ms);
  if (naive_ms >= 0)
    std::printf("  naive %10.3f ms", naive_ms);
  std::printf("  speedup %.2fx\n", ser_ms / par_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int big_n = 1 << 20;
  int reps = 3;
  if (argc > 1) big_n = std::atoi(argv[1]);
  if (argc > 2) reps = std::atoi(argv[2]);

  std::printf("sumset kernel benchmark (%d threads available)\n",
              omp_get_max_threads());

  bench_case("1D N=4096 p=1/4 (vs naive)", Box::line(4096), Rational(1, 4), 7, reps,
             true);
  bench_case("1D N=65536 p=1/8", Box::line(65536), Rational(1, 8), 7, reps, false);
  bench_case(("1D N=" + std::to_string(big_n) + " p=1/64").c_str(),
             Box::line(big_n), Rational(1, 64), 7, reps, false);
  bench_case("2D m=(63,63) p=1/4 (vs naive)", Box({63, 63}), Rational(1, 4), 7,
             reps, true);
  bench_case("2D m=(511,511) p=1/16", Box({511, 511}), Rational(1, 16), 7, reps,
             false);
  bench_case("3D m=(63,63,63) p=1/32", Box({63, 63, 63}), Rational(1, 32), 7, reps,
             false);
  return 0;
}
