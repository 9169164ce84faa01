// Compares the serial reference kernels against the OpenMP ones on
// medium-sized workloads and reports wall times and speedups. Results of the
// two paths are asserted equal before any timing is reported.
#include "lrn/curves.hpp"
#include "lrn/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace lrn;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0)
             .count() /
         1e6;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s reference %8.3fs   omp kernel %8.3fs   speedup %.2fx   %s\n",
              name, serial, parallel, serial / parallel,
              equal ? "results equal" : "RESULTS DIFFER");
}

int bench_brute(long ymax) {
  SearchBox box;
  box.nSet = {3};
  box.yMax = ymax;
  auto t0 = Clock::now();
  auto serial = brute_force_search_serial(box);
  double ts = seconds_since(t0);
  t0 = Clock::now();
  auto parallel = brute_force_search(box, 0);
  double tp = seconds_since(t0);
  bool equal = serial == parallel;
  report("brute force (n=3)", ts, tp, equal);
  return equal ? 0 : 1;
}

int bench_mordell(long numerBound) {
  auto curves = enumerate_mordell_curves();
  auto t0 = Clock::now();
  std::vector<SweepHit<MordellCurveSpec>> serial;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (auto& p : s_points_mordell(curves[i], 2, numerBound))
      serial.push_back({i, std::move(p)});
  double ts = seconds_since(t0);
  t0 = Clock::now();
  auto parallel = sweep_mordell(curves, 2, numerBound, 0);
  double tp = seconds_since(t0);
  bool equal = serial == parallel;
  report("mordell sweep", ts, tp, equal);
  return equal ? 0 : 1;
}

int bench_cubic(long numerBound) {
  auto curves = enumerate_p7_curves(CubicFamily::VOne);
  auto t0 = Clock::now();
  std::vector<SweepHit<CubicCurveSpec>> serial;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (auto& p : s_points_cubic(curves[i], 2, numerBound))
      serial.push_back({i, std::move(p)});
  double ts = seconds_since(t0);
  t0 = Clock::now();
  auto parallel = sweep_cubic(curves, 2, numerBound, 0);
  double tp = seconds_since(t0);
  bool equal = serial == parallel;
  report("p7 cubic sweep (v=1)", ts, tp, equal);
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  long ymax = argc > 1 ? std::atol(argv[1]) : 100000;
  long numerBound = argc > 2 ? std::atol(argv[2]) : 10000;
#ifdef _OPENMP
  std::printf("OpenMP max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel == serial\n");
#endif
  int rc = 0;
  rc |= bench_brute(ymax);
  rc |= bench_mordell(numerBound);
  rc |= bench_cubic(numerBound);
  return rc;
}
