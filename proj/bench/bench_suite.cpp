// Serial reference versus OpenMP evaluation of the iff suites.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "unilat/iff_suite.hpp"

using namespace unilat;

namespace {

double seconds_for(const std::string& claim, const Population& pop, SuiteConfig cfg, bool parallel, IffResult& out) {
  cfg.parallel = parallel;
  const auto t0 = std::chrono::steady_clock::now();
  out = run_claim(claim, pop, cfg);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const IffResult& a, const IffResult& b) {
  return a.tested == b.tested && a.confirmations == b.confirmations && a.excluded == b.excluded &&
         a.counterexample_count == b.counterexample_count && summary_record(a) == summary_record(b);
}

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  cfg.enumeration.max_elements = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  std::cout << "threads " << omp_get_max_threads() << ", lattices up to " << cfg.enumeration.max_elements
            << " elements\n";
  std::cout << "claim                instances   serial s  parallel s  speedup  identical\n";
  bool ok = true;
  for (const auto& id : claim_ids()) {
    const Population pop = build_population(population_for(id), cfg.enumeration);
    IffResult s, p;
    const double ts = seconds_for(id, pop, cfg, false, s);
    const double tp = seconds_for(id, pop, cfg, true, p);
    const bool eq = same(s, p);
    ok = ok && eq;
    std::printf("%-20s %9zu %10.3f %11.3f %8.2f  %s\n", id.c_str(), pop.instances.size(), ts, tp,
                tp > 0 ? ts / tp : 0.0, eq ? "yes" : "NO");
  }
  return ok ? 0 : 1;
}
