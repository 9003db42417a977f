// Compares the serial reference implementations of the data-parallel kernels
// against their OpenMP versions and checks that both produce identical output.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pqw/families.hpp"
#include "pqw/pi1.hpp"
#include "pqw/product_quotient.hpp"
#include "pqw/quotient_table.hpp"
#include "pqw/schreier.hpp"

using namespace pqw;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_ms(F&& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    double t0 = now_ms();
    fn();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
            << parallel_ms << " ms" << std::setw(8) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x   "
            << (equal ? "outputs equal" : "OUTPUT MISMATCH") << "\n";
}

void bench_census(int n, int reps) {
  ProductQuotientSpec spec = x_family(n);
  CensusOptions ser{false, 10'000'000};
  CensusOptions par{true, 10'000'000};
  Census a, b;
  double ts = time_ms([&] { a = singular_census(spec, ser); }, reps);
  double tp = time_ms([&] { b = singular_census(spec, par); }, reps);
  row("census X n=" + std::to_string(n), ts, tp, a == b);
}

void bench_schreier(int n, int reps) {
  ProductQuotientSpec spec = x_family(n);
  Pi1Options opt;
  if (n >= 5) opt.limits.max_relators = 8'000'000;
  FiberProduct fp = build_fiber_product(spec, opt);
  SchreierOptions ser{false, 0, 1 << 15};
  SchreierOptions par{true, 0, 1 << 15};
  SubgroupPresentation a, b;
  double ts = time_ms([&] { a = reidemeister_schreier(fp.ambient, fp.table, ser); }, reps);
  double tp = time_ms([&] { b = reidemeister_schreier(fp.ambient, fp.table, par); }, reps);
  row("schreier rewrite X n=" + std::to_string(n), ts, tp,
      a.pres.relators == b.pres.relators);
}

void bench_fix(int n, int reps) {
  ProductQuotientSpec spec = x_family(n);
  Pi1Options base;
  if (n >= 5) base.limits.max_relators = 8'000'000;
  FiberProduct fp = build_fiber_product(spec, base);
  Pi1Options ser = base, par = base;
  ser.parallel = false;
  par.parallel = true;
  std::vector<FixGenerator> a, b;
  double ts = time_ms([&] { a = enumerate_fix_generators(spec, fp, ser); }, reps);
  double tp = time_ms([&] { b = enumerate_fix_generators(spec, fp, par); }, reps);
  bool equal = a.size() == b.size();
  for (std::size_t i = 0; equal && i < a.size(); ++i) {
    equal = a[i].rewritten == b[i].rewritten && a[i].ambient_word == b[i].ambient_word;
  }
  row("fix generators X n=" + std::to_string(n), ts, tp, equal);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  bool big = argc > 1 && std::strcmp(argv[1], "--big") == 0;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel paths run serially\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << std::setw(9) << "speedup" << "\n";

  int reps = quick ? 1 : 3;
  bench_census(quick ? 3 : 5, reps);
  bench_schreier(quick ? 2 : 3, reps);
  if (!quick) bench_schreier(4, 1);
  bench_fix(quick ? 2 : 4, reps);
  if (big) {
    // 917505 Schreier generators, 7.2M raw relator traces; needs ~2 GB.
    bench_schreier(5, 1);
    bench_fix(5, 1);
  }
  return 0;
}
