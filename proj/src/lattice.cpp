#include "ordpref/lattice.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

namespace ordpref {

std::optional<std::size_t> MonoidLattice::find(const ClosedMonoid& m) const {
  auto it = std::find(elements.begin(), elements.end(), m);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Up to 3 states every member of a monoid is one of 512 codes, so inclusion is a bitset test.
constexpr std::size_t kUpsetStates = 3;

Bits upset_bits(const ClosedMonoid& m) {
  const std::size_t cells = m.ground().size() * m.ground().size();
  Bits out((std::size_t{1} << cells) / 64 + 1, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code)
    for (const auto& r : m.minimal_members())
      if ((r.code() & ~code) == 0) {
        set_bit(out, code);
        break;
      }
  return out;
}

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

}  // namespace

MonoidLattice build_lattice(const GroundSet& ground, std::vector<ClosedMonoid> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const std::size_t m = family.size();
  if (m > kMaxLatticeElements)
    throw ResourceLimit("lattice structure is limited to " + std::to_string(kMaxLatticeElements) +
                        " elements, got " + std::to_string(m));
  for (const auto& e : family) require_same_ground(ground, e.ground(), "lattice element");

  std::vector<Bits> upsets;
  if (ground.size() <= kUpsetStates)
    for (const auto& e : family) upsets.push_back(upset_bits(e));
  auto includes = [&](std::size_t i, std::size_t j) {
    return upsets.empty() ? family[i].is_subset_of(family[j]) : bits_subset(upsets[i], upsets[j]);
  };

  const std::size_t words = m / 64 + 1;
  std::vector<Bits> below(m, Bits(words, 0));  // below[j] holds every i with family[i] ⊆ family[j]
  std::vector<std::size_t> height(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i == j || includes(i, j)) {
        set_bit(below[j], i);
        ++height[j];
      }

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return height[a] < height[b]; });

  MonoidLattice lattice{ground, {}, {}, {}, {}, std::nullopt, std::nullopt};
  lattice.elements.reserve(m);
  for (auto i : order) lattice.elements.push_back(family[i]);

  // Covers of j: walk its strict lower set from the top, dropping everything below a cover.
  for (std::size_t hi = 0; hi < m; ++hi) {
    auto pending = below[order[hi]];
    std::vector<std::size_t> lower;
    for (std::size_t lo = hi; lo-- > 0;)
      if (test_bit(pending, order[lo])) {
        lower.push_back(lo);
        const auto& drop = below[order[lo]];
        for (std::size_t w = 0; w < words; ++w) pending[w] &= ~drop[w];
      }
    std::sort(lower.begin(), lower.end());
    for (auto lo : lower) lattice.hasse_edges.emplace_back(lo, hi);
  }
  std::sort(lattice.hasse_edges.begin(), lattice.hasse_edges.end());

  for (std::size_t k = 0; k < m; ++k) {
    const auto i = order[k];
    if (height[i] == m) lattice.greatest = k;
    bool is_least = true;
    for (std::size_t j = 0; j < m && is_least; ++j) is_least = test_bit(below[j], i);
    if (is_least) lattice.least = k;
  }
  for (auto [lo, hi] : lattice.hasse_edges) {
    if (lattice.least && lo == *lattice.least) lattice.atoms.push_back(hi);
    if (lattice.greatest && hi == *lattice.greatest) lattice.dual_atoms.push_back(lo);
  }
  std::sort(lattice.atoms.begin(), lattice.atoms.end());
  std::sort(lattice.dual_atoms.begin(), lattice.dual_atoms.end());
  return lattice;
}

namespace {

// |Y| = 2: a relation is a 4-bit code, a family of relations a 16-bit mask.
struct TwoStateTables {
  std::array<std::array<std::uint8_t, 16>, 16> product{};  // product[a][b] = b ∘ a
  std::array<std::uint16_t, 16> supersets{};
  std::uint8_t identity = 0;

  explicit TwoStateTables(const GroundSet& states) {
    for (std::uint64_t a = 0; a < 16; ++a) {
      const auto ra = BinaryRelation::from_code(states, a);
      for (std::uint64_t b = 0; b < 16; ++b)
        product[a][b] = static_cast<std::uint8_t>(compose(ra, BinaryRelation::from_code(states, b)).code());
      for (std::uint64_t s = 0; s < 16; ++s)
        if ((s & a) == a) supersets[a] |= static_cast<std::uint16_t>(1u << s);
    }
    identity = static_cast<std::uint8_t>(BinaryRelation::identity(states).code());
  }

  bool closed(std::uint32_t family) const {
    if (!((family >> identity) & 1u)) return false;
    for (unsigned a = 0; a < 16; ++a) {
      if (!((family >> a) & 1u)) continue;
      if ((supersets[a] & ~family) != 0) return false;
      for (unsigned b = 0; b < 16; ++b)
        if (((family >> b) & 1u) && !((family >> product[a][b]) & 1u)) return false;
    }
    return true;
  }

  ClosedMonoid to_monoid(const GroundSet& states, std::uint32_t family) const {
    std::vector<BinaryRelation> minimal;
    for (unsigned a = 0; a < 16; ++a) {
      if (!((family >> a) & 1u)) continue;
      bool is_min = true;
      for (unsigned b = 0; b < 16 && is_min; ++b)
        if (b != a && ((family >> b) & 1u) && (b & a) == b) is_min = false;
      if (is_min) minimal.push_back(BinaryRelation::from_code(states, a));
    }
    return unchecked_monoid(states, std::move(minimal));
  }
};

void require_two_states(const GroundSet& states) {
  if (states.size() != 2)
    throw UnsupportedSize("exhaustive enumeration supports exactly 2 states (got " + std::to_string(states.size()) +
                          "); use generated mode for larger state sets");
}

}  // namespace

MonoidLattice enumerate_exhaustive_serial(const GroundSet& states) {
  require_two_states(states);
  const TwoStateTables tables(states);
  std::vector<ClosedMonoid> found;
  for (std::uint32_t family = 0; family < (1u << 16); ++family)
    if (tables.closed(family)) found.push_back(tables.to_monoid(states, family));
  return build_lattice(states, std::move(found));
}

MonoidLattice enumerate_exhaustive(const GroundSet& states) {
  require_two_states(states);
  const TwoStateTables tables(states);
  std::vector<std::uint32_t> families;
#pragma omp parallel
  {
    std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
    for (int family = 0; family < (1 << 16); ++family)
      if (tables.closed(static_cast<std::uint32_t>(family))) local.push_back(static_cast<std::uint32_t>(family));
#pragma omp critical
    families.insert(families.end(), local.begin(), local.end());
  }
  std::sort(families.begin(), families.end());
  std::vector<ClosedMonoid> found;
  found.reserve(families.size());
  for (auto f : families) found.push_back(tables.to_monoid(states, f));
  return build_lattice(states, std::move(found));
}

std::vector<BinaryRelation> all_relations(const GroundSet& states) {
  const std::size_t n = states.size();
  if (n > 4) throw UnsupportedSize("relation enumeration needs at most 4 states");
  std::vector<BinaryRelation> out;
  out.reserve(std::size_t{1} << (n * n));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code)
    out.push_back(BinaryRelation::from_code(states, code));
  return out;
}

namespace {

// Closes every subset of pool[first..] of size <= depth extended from chosen.
void close_subsets(const GroundSet& states, const std::vector<BinaryRelation>& pool, std::size_t first,
                   std::size_t depth, std::vector<BinaryRelation>& chosen, std::set<ClosedMonoid>& out) {
  out.insert(closure(states, chosen));
  if (depth == 0) return;
  for (std::size_t i = first; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    close_subsets(states, pool, i + 1, depth - 1, chosen, out);
    chosen.pop_back();
  }
}

void check_pool(const GroundSet& states, const std::vector<BinaryRelation>& pool) {
  for (const auto& r : pool) require_same_ground(states, r.ground(), "generator pool");
}

void guard(std::size_t count, const GeneratedOptions& options) {
  if (count > options.max_monoids)
    throw ResourceLimit("generated enumeration exceeded " + std::to_string(options.max_monoids) + " monoids");
}

}  // namespace

std::vector<ClosedMonoid> enumerate_generated_serial(const GroundSet& states, const std::vector<BinaryRelation>& pool,
                                                     const GeneratedOptions& options) {
  check_pool(states, pool);
  std::set<ClosedMonoid> found{reflexive_monoid(states)};
  std::vector<BinaryRelation> chosen;
  if (options.max_generators > 0) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      chosen.assign(1, pool[i]);
      close_subsets(states, pool, i + 1, options.max_generators - 1, chosen, found);
      guard(found.size(), options);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<ClosedMonoid> enumerate_generated(const GroundSet& states, const std::vector<BinaryRelation>& pool,
                                              const GeneratedOptions& options) {
  check_pool(states, pool);
  std::set<ClosedMonoid> found{reflexive_monoid(states)};
  if (options.max_generators == 0) return {found.begin(), found.end()};
  std::atomic<bool> overflow{false};
  const auto count = static_cast<long>(pool.size());
#pragma omp parallel
  {
    std::set<ClosedMonoid> local;
    std::vector<BinaryRelation> chosen;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      chosen.assign(1, pool[static_cast<std::size_t>(i)]);
      close_subsets(states, pool, static_cast<std::size_t>(i) + 1, options.max_generators - 1, chosen, local);
      if (local.size() > options.max_monoids) overflow = true;
    }
#pragma omp critical
    found.insert(local.begin(), local.end());
  }
  if (overflow) guard(options.max_monoids + 1, options);
  guard(found.size(), options);
  return {found.begin(), found.end()};
}

std::vector<ClosedMonoid> atoms(const GroundSet& states) {
  std::vector<ClosedMonoid> out;
  for (std::size_t y = 0; y < states.size(); ++y) {
    std::vector<BinaryRelation> gen{BinaryRelation::full(states).without_pair(y, y)};
    out.push_back(closure(states, gen));
  }
  return out;
}

namespace {

Census group_preferences(std::vector<Preference> derived) {
  Census census;
  census.entry_of_monoid.resize(derived.size());
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t i = 0; i < derived.size(); ++i) {
    const auto rows = derived[i].rel().rows();
    auto [it, fresh] = index.try_emplace({rows.begin(), rows.end()}, census.entries.size());
    if (fresh) census.entries.push_back({derived[i], {}});
    census.entries[it->second].monoids.push_back(i);
    census.entry_of_monoid[i] = it->second;
  }
  return census;
}

}  // namespace

Census preference_census_serial(const Dmp& g, const MonoidLattice& lattice) {
  require_same_ground(g.states(), lattice.ground, "preference census");
  std::vector<Preference> derived;
  derived.reserve(lattice.elements.size());
  for (const auto& m : lattice.elements) derived.push_back(derive(g, m));
  return group_preferences(std::move(derived));
}

Census preference_census(const Dmp& g, const MonoidLattice& lattice) {
  require_same_ground(g.states(), lattice.ground, "preference census");
  const auto count = static_cast<long>(lattice.elements.size());
  std::vector<std::optional<Preference>> slots(lattice.elements.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i)
    slots[static_cast<std::size_t>(i)].emplace(derive(g, lattice.elements[static_cast<std::size_t>(i)]));
  std::vector<Preference> derived;
  derived.reserve(slots.size());
  for (auto& s : slots) derived.push_back(std::move(*s));
  return group_preferences(std::move(derived));
}

bool census_is_monotone(const MonoidLattice& lattice, const Census& census) {
  for (auto [lo, hi] : lattice.hasse_edges) {
    const auto& a = census.entries[census.entry_of_monoid[lo]].preference.rel();
    const auto& b = census.entries[census.entry_of_monoid[hi]].preference.rel();
    if (!is_subset(a, b)) return false;
  }
  return true;
}

Representation represent_relation(const BinaryRelation& sigma) {
  const auto& states = sigma.ground();
  const std::size_t n = states.size();
  if (2 * n > kMaxGroundSize) throw StructuralError("state set too large to represent");
  std::vector<std::string> labels;
  for (const auto& l : states.labels()) labels.push_back(l + "'");
  for (const auto& l : states.labels()) labels.push_back(l + "''");
  GroundSet outcomes(std::move(labels));
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (auto [y1, y2] : sigma.pairs()) cross.emplace_back(y1, n + y2);
  std::vector<std::size_t> first(n), second(n);
  for (std::size_t y = 0; y < n; ++y) {
    first[y] = y;
    second[y] = n + y;
  }
  return Representation{PartialOrder::from_comparabilities(outcomes, cross), OutcomeMap(states, outcomes, first),
                        OutcomeMap(states, outcomes, second)};
}

std::vector<std::pair<std::string, ClosedMonoid>> named_monoids(const GroundSet& states) {
  std::vector<std::pair<std::string, ClosedMonoid>> out;
  out.emplace_back("pareto", reflexive_monoid(states));
  out.emplace_back("universal", universal_monoid(states));
  for (std::size_t y = 0; y < states.size(); ++y)
    out.emplace_back("dictator:" + states.label(y), dictator_monoid(states, y));
  if (states.size() <= 4) {
    out.emplace_back("beta", surjective_monoid(states));
    out.emplace_back("dual-beta", total_monoid(states));
    out.emplace_back("beta-both", beta_both_monoid(states));
  }
  if (states.size() >= 2)
    for (std::size_t y = 0; y < states.size(); ++y) out.emplace_back("atom:" + states.label(y), atom_monoid(states, y));
  return out;
}

std::optional<std::string> canonical_name(const ClosedMonoid& m,
                                          const std::vector<std::pair<std::string, ClosedMonoid>>& named) {
  for (const auto& [name, candidate] : named)
    if (candidate == m) return name;
  return std::nullopt;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const MonoidLattice& lattice, DotLabels labels) {
  const auto named = named_monoids(lattice.ground);
  std::ostringstream out;
  out << "digraph monoids {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    std::string label = signature(lattice.elements[i]);
    if (labels == DotLabels::Canonical)
      if (auto name = canonical_name(lattice.elements[i], named)) label = *name;
    out << "  m" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (auto [lo, hi] : lattice.hasse_edges) out << "  m" << lo << " -> m" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ordpref
