#pragma once

// Enumeration of closed submonoids and the lattice they form under inclusion.
//
// The enumeration and census kernels come in two flavours: an OpenMP version
// and a serial reference (`*_serial`). Both return identical, sorted results.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordpref/dmp.hpp"
#include "ordpref/monoid.hpp"
#include "ordpref/order.hpp"

namespace ordpref {

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

struct MonoidLattice {
  GroundSet ground;
  /// Sorted so that every element comes after all elements it contains.
  std::vector<ClosedMonoid> elements;
  /// Covering pairs (lower, upper) by index.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
  std::vector<std::size_t> atoms;       // covers of the least element
  std::vector<std::size_t> dual_atoms;  // covered by the greatest element
  std::optional<std::size_t> least;
  std::optional<std::size_t> greatest;

  std::optional<std::size_t> find(const ClosedMonoid& m) const;
};

constexpr std::size_t kMaxLatticeElements = 8192;

/// Orders, deduplicates and links a family of monoids over one ground set.
/// Throws ResourceLimit above kMaxLatticeElements distinct elements.
MonoidLattice build_lattice(const GroundSet& ground, std::vector<ClosedMonoid> family);

/// Every closed submonoid for |Y| = 2, found by filtering all 2^16 families of
/// relations. Throws UnsupportedSize for any other |Y|.
MonoidLattice enumerate_exhaustive(const GroundSet& states);
MonoidLattice enumerate_exhaustive_serial(const GroundSet& states);

/// All 2^(n*n) relations in code order. Needs n <= 4.
std::vector<BinaryRelation> all_relations(const GroundSet& states);

struct GeneratedOptions {
  std::size_t max_generators = 1;
  /// Throws ResourceLimit once more distinct monoids than this are found.
  std::size_t max_monoids = 200000;
};

/// Closures of every subset of the pool with at most max_generators members,
/// deduplicated and sorted.
std::vector<ClosedMonoid> enumerate_generated(const GroundSet& states, const std::vector<BinaryRelation>& pool,
                                              const GeneratedOptions& options = {});
std::vector<ClosedMonoid> enumerate_generated_serial(const GroundSet& states,
                                                     const std::vector<BinaryRelation>& pool,
                                                     const GeneratedOptions& options = {});

/// The monoids generated by Y×Y minus one diagonal pair, one per state.
std::vector<ClosedMonoid> atoms(const GroundSet& states);

struct CensusEntry {
  Preference preference;
  std::vector<std::size_t> monoids;
};

struct Census {
  /// Distinct derived preferences in order of their first monoid.
  std::vector<CensusEntry> entries;
  /// entry index for each lattice element.
  std::vector<std::size_t> entry_of_monoid;
};

Census preference_census(const Dmp& g, const MonoidLattice& lattice);
Census preference_census_serial(const Dmp& g, const MonoidLattice& lattice);

/// Monoid inclusion implies preference inclusion along every Hasse edge.
bool census_is_monotone(const MonoidLattice& lattice, const Census& census);

struct Representation {
  PartialOrder order;
  OutcomeMap phi;
  OutcomeMap psi;
};

/// Two disjoint copies of Y, ordered only by the pairs of sigma running from the
/// first copy to the second, so that pullback(phi, psi, order) == sigma.
Representation represent_relation(const BinaryRelation& sigma);

/// Named monoids in labelling precedence order: pareto, universal, dictators,
/// beta, dual-beta, beta-both, atoms.
std::vector<std::pair<std::string, ClosedMonoid>> named_monoids(const GroundSet& states);

std::optional<std::string> canonical_name(const ClosedMonoid& m,
                                          const std::vector<std::pair<std::string, ClosedMonoid>>& named);

enum class DotLabels { Canonical, Signature };

std::string export_dot(const MonoidLattice& lattice, DotLabels labels = DotLabels::Canonical);

}  // namespace ordpref
