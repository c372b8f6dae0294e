#include "ordpref/dmp.hpp"

#include <cassert>

namespace ordpref {

Dmp::Dmp(GroundSet strategies, GroundSet states, PartialOrder outcomes, std::vector<std::size_t> table)
    : strategies_(std::move(strategies)),
      states_(std::move(states)),
      outcomes_(std::move(outcomes)),
      table_(std::move(table)) {
  if (table_.size() != strategies_.size() * states_.size())
    throw StructuralError("realization table has " + std::to_string(table_.size()) + " cells, expected " +
                          std::to_string(strategies_.size() * states_.size()));
  for (auto a : table_)
    if (a >= outcomes_.size()) throw StructuralError("realization table references an unknown outcome");
}

Preference::Preference(BinaryRelation rel) : rel_(std::move(rel)) {
  if (!is_reflexive(rel_)) throw ValidationError("preference is not reflexive: " + rel_.to_string());
  if (!is_transitive(rel_)) throw ValidationError("preference is not transitive: " + rel_.to_string());
}

std::vector<std::size_t> Preference::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < rel_.size(); ++x) {
    bool dominated = false;
    for (auto z : rel_.row(x).indices())
      if (!rel_.test(z, x)) dominated = true;
    if (!dominated) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Preference::greatest() const {
  std::vector<std::size_t> out;
  const auto all = IndexSet::all(rel_.size());
  const auto inv = inverse(rel_);
  for (std::size_t x = 0; x < rel_.size(); ++x)
    if (inv.row(x) == all) out.push_back(x);
  return out;
}

std::vector<IndexSet> Preference::equivalence_classes() const {
  std::vector<IndexSet> out;
  IndexSet seen;
  const auto inv = inverse(rel_);
  for (std::size_t x = 0; x < rel_.size(); ++x) {
    if (seen.contains(x)) continue;
    auto cls = rel_.row(x) & inv.row(x);
    seen = seen | cls;
    out.push_back(cls);
  }
  return out;
}

OutcomeMap f_star(const Dmp& g, std::size_t x) {
  if (x >= g.strategies().size()) throw StructuralError("strategy index out of range");
  std::vector<std::size_t> row(g.states().size());
  for (std::size_t y = 0; y < row.size(); ++y) row[y] = g.at(x, y);
  return OutcomeMap(g.states(), g.outcome_set(), std::move(row));
}

namespace {

template <class Pred>
BinaryRelation strategy_relation(const Dmp& g, Pred pred) {
  const std::size_t n = g.strategies().size();
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      if (pred(x1, x2)) rows[x1] |= std::uint64_t{1} << x2;
  return BinaryRelation(g.strategies(), std::move(rows));
}

}  // namespace

Preference pareto(const Dmp& g) {
  const auto& w = g.outcomes();
  return Preference(strategy_relation(g, [&](auto x1, auto x2) {
    for (std::size_t y = 0; y < g.states().size(); ++y)
      if (!w.less_equal(g.at(x1, y), g.at(x2, y))) return false;
    return true;
  }));
}

BinaryRelation strict_pareto(const Dmp& g) {
  const auto& w = g.outcomes();
  return strategy_relation(g, [&](auto x1, auto x2) {
    for (std::size_t y = 0; y < g.states().size(); ++y)
      if (!w.less(g.at(x1, y), g.at(x2, y))) return false;
    return true;
  });
}

BinaryRelation state_preference(const Dmp& g, std::size_t x1, std::size_t x2) {
  return pullback(f_star(g, x1), f_star(g, x2), g.outcomes());
}

BinaryRelation derive_relation(const Dmp& g, const ClosedMonoid& monoid) {
  require_same_ground(g.states(), monoid.ground(), "derive");
  return strategy_relation(g, [&](auto x1, auto x2) { return monoid.contains(state_preference(g, x1, x2)); });
}

Preference derive(const Dmp& g, const ClosedMonoid& monoid) { return Preference(derive_relation(g, monoid)); }

namespace {

// For every y1 some y2 has F(x1, ·) <= F(x2, ·) with the roles given by the flag.
bool forall_exists(const Dmp& g, std::size_t x1, std::size_t x2, bool beta) {
  const auto& w = g.outcomes();
  const std::size_t n = g.states().size();
  for (std::size_t y1 = 0; y1 < n; ++y1) {
    bool found = false;
    for (std::size_t y2 = 0; y2 < n && !found; ++y2)
      found = beta ? w.less_equal(g.at(x1, y2), g.at(x2, y1)) : w.less_equal(g.at(x1, y1), g.at(x2, y2));
    if (!found) return false;
  }
  return true;
}

}  // namespace

Preference beta_explicit(const Dmp& g) {
  return Preference(strategy_relation(g, [&](auto x1, auto x2) { return forall_exists(g, x1, x2, true); }));
}

Preference dual_beta_explicit(const Dmp& g) {
  return Preference(strategy_relation(g, [&](auto x1, auto x2) { return forall_exists(g, x1, x2, false); }));
}

Preference beta_both_explicit(const Dmp& g) {
  return Preference(strategy_relation(
      g, [&](auto x1, auto x2) { return forall_exists(g, x1, x2, true) && forall_exists(g, x1, x2, false); }));
}

namespace {

IndexSet row_outcomes(const Dmp& g, std::size_t x) {
  IndexSet s;
  for (std::size_t y = 0; y < g.states().size(); ++y) s.insert(g.at(x, y));
  return s;
}

IndexSet column_outcomes(const Dmp& g, std::size_t y) {
  IndexSet s;
  for (std::size_t x = 0; x < g.strategies().size(); ++x) s.insert(g.at(x, y));
  return s;
}

}  // namespace

AlphaResult alpha(const Dmp& g) {
  const std::size_t n = g.strategies().size();
  std::vector<IndexSet> guaranteed(n);
  for (std::size_t x = 0; x < n; ++x)
    guaranteed[x] = down_set(g.outcomes(), row_outcomes(g, x), BoundMode::LowerBounds);
  Preference pref(strategy_relation(g, [&](auto x1, auto x2) { return guaranteed[x1].is_subset_of(guaranteed[x2]); }));
  auto greatest = pref.greatest();
  return {std::move(guaranteed), std::move(pref), std::move(greatest)};
}

CharacteristicSets characteristic_sets(const Dmp& g) {
  CharacteristicSets cs;
  for (std::size_t x = 0; x < g.strategies().size(); ++x)
    cs.lower = cs.lower | down_set(g.outcomes(), row_outcomes(g, x), BoundMode::LowerBounds);
  cs.upper = IndexSet::all(g.outcome_set().size());
  for (std::size_t y = 0; y < g.states().size(); ++y)
    cs.upper = cs.upper & down_set(g.outcomes(), column_outcomes(g, y), BoundMode::Union);
  assert(cs.lower.is_subset_of(cs.upper));
  cs.has_generalized_value = cs.lower == cs.upper;
  return cs;
}

std::vector<StrategyPair> saddle_points(const Dmp& g) {
  const auto& w = g.outcomes();
  const std::size_t nx = g.strategies().size(), ny = g.states().size();
  std::vector<StrategyPair> out;
  for (std::size_t x0 = 0; x0 < nx; ++x0)
    for (std::size_t y0 = 0; y0 < ny; ++y0) {
      const auto v = g.at(x0, y0);
      bool ok = true;
      for (std::size_t x = 0; x < nx && ok; ++x) ok = w.less_equal(g.at(x, y0), v);
      for (std::size_t y = 0; y < ny && ok; ++y) ok = w.less_equal(v, g.at(x0, y));
      if (ok) out.emplace_back(x0, y0);
    }
  return out;
}

Dmp dualize(const Dmp& g) {
  const std::size_t nx = g.strategies().size(), ny = g.states().size();
  std::vector<std::size_t> table(nx * ny);
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t x = 0; x < nx; ++x) table[y * nx + x] = g.at(x, y);
  return Dmp(g.states(), g.strategies(), g.outcomes().dual(), std::move(table));
}

Morphism make_morphism(Dmp source, Dmp target, std::vector<std::size_t> map) {
  if (!(source.strategies() == target.strategies()) || !(source.states() == target.states()))
    throw MorphismError("morphism endpoints must share strategies and states");
  const auto& a = source.outcomes();
  const auto& b = target.outcomes();
  if (map.size() != a.size())
    throw MorphismError("outcome map has " + std::to_string(map.size()) + " entries for " +
                        std::to_string(a.size()) + " outcomes");
  for (auto v : map)
    if (v >= b.size()) throw MorphismError("outcome map leaves the target outcome set");
  for (std::size_t a1 = 0; a1 < a.size(); ++a1)
    for (auto a2 : a.leq().row(a1).indices())
      if (!b.less_equal(map[a1], map[a2]))
        throw MorphismError("map is not isotone: " + a.ground().label(a1) + " <= " + a.ground().label(a2) +
                            " but " + b.ground().label(map[a1]) + " !<= " + b.ground().label(map[a2]));
  for (std::size_t x = 0; x < source.strategies().size(); ++x)
    for (std::size_t y = 0; y < source.states().size(); ++y)
      if (map[source.at(x, y)] != target.at(x, y))
        throw MorphismError("target table differs from the mapped source table at (" +
                            source.strategies().label(x) + "," + source.states().label(y) + ")");
  return Morphism{std::move(source), std::move(target), std::move(map)};
}

Morphism apply_morphism(const Dmp& g, std::vector<std::size_t> map, const PartialOrder& target_order) {
  if (map.size() != g.outcome_set().size())
    throw MorphismError("outcome map must be total on the outcome set");
  std::vector<std::size_t> table(g.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (map[g.table()[i]] >= target_order.size()) throw MorphismError("outcome map leaves the target outcome set");
    table[i] = map[g.table()[i]];
  }
  Dmp image(g.strategies(), g.states(), target_order, std::move(table));
  return make_morphism(g, std::move(image), std::move(map));
}

PairVerdict check_functoriality(const Morphism& f, const ClosedMonoid& monoid) {
  const auto before = derive(f.source, monoid);
  const auto after = derive(f.target, monoid);
  for (auto [x1, x2] : before.rel().pairs())
    if (!after.prefers(x1, x2)) return {false, StrategyPair{x1, x2}};
  return {};
}

RegularityVerdict check_regularity(const Dmp& g, const Dmp& other, StrategyPair first, StrategyPair second,
                                   const ClosedMonoid& monoid) {
  if (!(state_preference(g, first.first, first.second) == state_preference(other, second.first, second.second)))
    return {true, false};
  const bool lhs = derive(g, monoid).prefers(first.first, first.second);
  const bool rhs = derive(other, monoid).prefers(second.first, second.second);
  return {lhs == rhs, true};
}

IndexSet agreement_states(const Dmp& g, std::size_t x1, std::size_t x2) {
  return projections(state_preference(g, x1, x2)).diagonal;
}

PairVerdict is_suitable(const Dmp& g, const Preference& pref) {
  require_same_ground(g.strategies(), pref.ground(), "suitability");
  const auto strict = strict_pareto(g);
  for (auto [x1, x2] : pref.rel().pairs())
    if (strict.test(x2, x1)) return {false, StrategyPair{x1, x2}};
  return {};
}

}  // namespace ordpref
