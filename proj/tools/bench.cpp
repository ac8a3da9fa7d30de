// Serial reference vs OpenMP kernels on the same inputs.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fibcube/counting.hpp"
#include "fibcube/cube.hpp"
#include "fibcube/harness.hpp"
#include "fibcube/iso.hpp"

using namespace fibcube;

namespace {

template <class F>
double time_it(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  const int d = argc > 1 ? std::atoi(argv[1]) : 9;
  std::printf("threads: %d, harness d = %d\n", omp_get_max_threads(), d);

  {
    const Word f = Word::parse("0110");
    std::uint64_t a = 0, b = 0;
    const double s = time_it([&] { a = brute_count_serial(24, f); });
    const double p = time_it([&] { b = brute_count(24, f); });
    row("brute_count d=24 f=0110", s, p, a == b);
  }
  {
    const auto g = build_graph(14, Word::parse("0110")).graph();
    Fingerprint a, b;
    const double s = time_it([&] { a = fingerprint_serial(g); });
    const double p = time_it([&] { b = fingerprint(g); });
    row("fingerprint Q_14(0110)", s, p, a == b);
  }
  {
    IsoClassTable a, b;
    const double s = time_it([&] { a = isom_classes_serial(d, 3, d - 1); });
    const double p = time_it([&] { b = isom_classes(d, 3, d - 1); });
    const std::string name = "isom_classes d=" + std::to_string(d);
    row(name.c_str(), s, p, a.classes == b.classes);
  }
  return 0;
}
