// Compares the serial reference Betti kernel against the OpenMP one on a few
// representative instances and reports wall times and speedup.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eidepth/depth_oracle.hpp"
#include "eidepth/report.hpp"

using namespace eidepth;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

struct Case {
  std::string name;
  MonomialIdeal ideal;
};

}  // namespace

int main(int argc, char** argv) {
  const bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";

  std::vector<Case> cases;
  cases.push_back({"path7_t2", power(edge_ideal(path_graph(7)), 2)});
  cases.push_back({"path7_t3", power(edge_ideal(path_graph(7)), 3)});
  cases.push_back({"caterpillar9_t2", power(edge_ideal(example_caterpillar9()), 2)});
  if (heavy)
    cases.push_back({"caterpillar9_t3", power(edge_ideal(example_caterpillar9()), 3)});

  const FieldSpec field = FieldSpec::rationals();
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%-18s %10s %12s %12s %9s\n", "case", "candidates", "serial[s]",
              "parallel[s]", "speedup");

  for (const auto& c : cases) {
    const auto candidates = candidate_degrees(c.ideal);

    const auto t0 = std::chrono::steady_clock::now();
    const BettiTable serial = multigraded_betti_serial(c.ideal, field);
    const auto t1 = std::chrono::steady_clock::now();
    const BettiTable parallel = multigraded_betti(c.ideal, field);
    const auto t2 = std::chrono::steady_clock::now();

    if (!(serial == parallel)) {
      std::fprintf(stderr, "MISMATCH between serial and parallel tables on %s\n",
                   c.name.c_str());
      return 1;
    }
    const double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("%-18s %10zu %12.3f %12.3f %8.2fx\n", c.name.c_str(), candidates.size(),
                ts, tp, ts / tp);
  }
  return 0;
}
