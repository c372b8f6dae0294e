// Serial vs OpenMP timings for the enumeration and census kernels.
//
//   ordpref_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#include "ordpref/lattice.hpp"

using namespace ordpref;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(2) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(8) << serial / parallel << "x"
            << (same ? "" : "  MISMATCH") << '\n';
}

Dmp random_dmp(std::mt19937& rng, const GroundSet& states, std::size_t strategies) {
  const auto chain = PartialOrder::chain(GroundSet::indexed("a", 4));
  std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
  std::vector<std::size_t> table(strategies * states.size());
  for (auto& v : table) v = pick(rng);
  return Dmp(GroundSet::indexed("x", strategies), states, chain, std::move(table));
}

bool same_census(const Census& a, const Census& b) {
  if (a.entry_of_monoid != b.entry_of_monoid || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!(a.entries[i].preference == b.entries[i].preference) || a.entries[i].monoids != b.entries[i].monoids)
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::cout << "threads: " << omp_get_max_threads() << ", best of " << repeats << "\n\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "omp" << std::setw(9) << "speedup" << "\n";

  const auto y2 = GroundSet::indexed("y", 2);
  const auto y3 = GroundSet::indexed("y", 3);

  MonoidLattice ex_s = enumerate_exhaustive_serial(y2), ex_p = ex_s;
  const double t_ex_s = best_ms(repeats, [&] { ex_s = enumerate_exhaustive_serial(y2); });
  const double t_ex_p = best_ms(repeats, [&] { ex_p = enumerate_exhaustive(y2); });
  report("exhaustive |Y|=2 (ms)", t_ex_s, t_ex_p, ex_s.elements == ex_p.elements);

  const auto pool = all_relations(y3);
  GeneratedOptions two;
  two.max_generators = 2;
  std::vector<ClosedMonoid> gen_s, gen_p;
  const double t_gen_s = best_ms(repeats, [&] { gen_s = enumerate_generated_serial(y3, pool, two); });
  const double t_gen_p = best_ms(repeats, [&] { gen_p = enumerate_generated(y3, pool, two); });
  report("generated |Y|=3, 2 gens (ms)", t_gen_s, t_gen_p, gen_s == gen_p);

  const auto lattice = build_lattice(y3, enumerate_generated(y3, pool));
  std::mt19937 rng(20240531);
  const auto g = random_dmp(rng, y3, 6);
  Census cen_s = preference_census_serial(g, lattice), cen_p = cen_s;
  const double t_cen_s = best_ms(repeats, [&] { cen_s = preference_census_serial(g, lattice); });
  const double t_cen_p = best_ms(repeats, [&] { cen_p = preference_census(g, lattice); });
  report("census |Y|=3, |X|=6 (ms)", t_cen_s, t_cen_p, same_census(cen_s, cen_p));
  return 0;
}
