#include "ordpref/monoid.hpp"

#include <algorithm>
#include <cmath>

namespace ordpref {

namespace {

bool dominated(const std::vector<BinaryRelation>& minimal, const BinaryRelation& rel) {
  return std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) { return is_subset(m, rel); });
}

// Surjective and total monoids carry n^n minimal members.
constexpr std::size_t kMaxFunctionGraphStates = 6;

std::vector<BinaryRelation> function_graphs(const GroundSet& ground, bool transposed) {
  const std::size_t n = ground.size();
  if (n > kMaxFunctionGraphStates)
    throw StructuralError("function-graph monoids are limited to " + std::to_string(kMaxFunctionGraphStates) +
                          " states");
  std::vector<BinaryRelation> out;
  std::vector<std::size_t> g(n, 0);
  while (true) {
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t y = 0; y < n; ++y) {
      if (transposed)
        rows[g[y]] |= std::uint64_t{1} << y;  // pair (g(y), y)
      else
        rows[y] |= std::uint64_t{1} << g[y];  // pair (y, g(y))
    }
    out.emplace_back(ground, std::move(rows));
    std::size_t pos = 0;
    while (pos < n && ++g[pos] == n) g[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace

std::vector<BinaryRelation> minimize(std::vector<BinaryRelation> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::stable_sort(family.begin(), family.end(),
                   [](const auto& a, const auto& b) { return a.count() < b.count(); });
  std::vector<BinaryRelation> kept;
  for (auto& rel : family)
    if (!dominated(kept, rel)) kept.push_back(std::move(rel));
  std::sort(kept.begin(), kept.end());
  return kept;
}

ClosedMonoid unchecked_monoid(const GroundSet& ground, std::vector<BinaryRelation> members) {
  for (const auto& m : members) require_same_ground(ground, m.ground(), "monoid member");
  return ClosedMonoid(ground, minimize(std::move(members)));
}

ClosedMonoid ClosedMonoid::from_antichain(const GroundSet& ground, std::vector<BinaryRelation> members) {
  for (const auto& m : members) require_same_ground(ground, m.ground(), "monoid member");
  auto minimal = minimize(std::move(members));
  if (auto check = validate_closed(ground, minimal); !check) {
    std::string detail;
    for (const auto& w : check.witnesses) detail += ' ' + w.to_string();
    throw ValidationError("not a closed submonoid (axiom " + std::to_string(static_cast<int>(*check.violated)) +
                          " fails):" + detail);
  }
  return ClosedMonoid(ground, std::move(minimal));
}

bool ClosedMonoid::contains(const BinaryRelation& rel) const {
  require_same_ground(ground_, rel.ground(), "monoid membership");
  return dominated(minimal_, rel);
}

bool ClosedMonoid::is_subset_of(const ClosedMonoid& other) const {
  require_same_ground(ground_, other.ground_, "monoid inclusion");
  return std::all_of(minimal_.begin(), minimal_.end(), [&](const auto& m) { return other.contains(m); });
}

ClosedMonoid closure(const GroundSet& ground, std::span<const BinaryRelation> generators) {
  std::vector<BinaryRelation> current{BinaryRelation::identity(ground)};
  for (const auto& g : generators) {
    require_same_ground(ground, g.ground(), "closure generator");
    current.push_back(g);
  }
  current = minimize(std::move(current));
  // The up-set only grows and lives in a finite lattice, so this terminates.
  while (true) {
    std::vector<BinaryRelation> next = current;
    for (const auto& a : current)
      for (const auto& b : current) {
        auto product = compose(a, b);
        if (!dominated(current, product)) next.push_back(std::move(product));
      }
    if (next.size() == current.size()) break;
    current = minimize(std::move(next));
  }
  return ClosedMonoid(ground, std::move(current));
}

ClosedMonoid reflexive_monoid(const GroundSet& ground) {
  return unchecked_monoid(ground, {BinaryRelation::identity(ground)});
}

ClosedMonoid surjective_monoid(const GroundSet& ground) {
  return unchecked_monoid(ground, function_graphs(ground, true));
}

ClosedMonoid total_monoid(const GroundSet& ground) {
  return unchecked_monoid(ground, function_graphs(ground, false));
}

ClosedMonoid beta_both_monoid(const GroundSet& ground) {
  return meet(surjective_monoid(ground), total_monoid(ground));
}

ClosedMonoid filter_monoid(const GroundSet& ground, IndexSet base) {
  if (base.empty()) throw ValidationError("filter base must be non-empty");
  if (!base.is_subset_of(IndexSet::all(ground.size()))) throw StructuralError("filter base outside the state set");
  std::vector<std::pair<std::size_t, std::size_t>> diag;
  for (auto y : base.indices()) diag.emplace_back(y, y);
  return unchecked_monoid(ground, {BinaryRelation::from_pairs(ground, diag)});
}

ClosedMonoid dictator_monoid(const GroundSet& ground, std::size_t state) {
  if (state >= ground.size()) throw StructuralError("dictator state out of range");
  return filter_monoid(ground, IndexSet::single(state));
}

ClosedMonoid idempotent_monoid(const BinaryRelation& sigma, bool allow_non_idempotent) {
  if (compose(sigma, sigma) != sigma) {
    if (!allow_non_idempotent)
      throw ValidationError("relation " + sigma.to_string() + " is not idempotent");
    std::vector<BinaryRelation> gens{sigma};
    return closure(sigma.ground(), gens);
  }
  return unchecked_monoid(sigma.ground(), {BinaryRelation::identity(sigma.ground()), sigma});
}

ClosedMonoid atom_monoid(const GroundSet& ground, std::size_t state) {
  if (ground.size() < 2) throw StructuralError("atom monoids need at least two states");
  if (state >= ground.size()) throw StructuralError("atom state out of range");
  auto rho = BinaryRelation::full(ground).without_pair(state, state);
  return unchecked_monoid(ground, {BinaryRelation::identity(ground), std::move(rho)});
}

ClosedMonoid universal_monoid(const GroundSet& ground) {
  return unchecked_monoid(ground, {BinaryRelation(ground)});
}

ClosedMonoid canonical(const GroundSet& ground, MonoidKind kind, const MonoidParams& params) {
  auto single_state = [&]() {
    if (params.states.size() != 1) throw ValidationError("expected exactly one state parameter");
    return params.states.indices().front();
  };
  switch (kind) {
    case MonoidKind::Reflexive: return reflexive_monoid(ground);
    case MonoidKind::Surjective: return surjective_monoid(ground);
    case MonoidKind::Total: return total_monoid(ground);
    case MonoidKind::BetaBoth: return beta_both_monoid(ground);
    case MonoidKind::Filter: return filter_monoid(ground, params.states);
    case MonoidKind::Dictator: return dictator_monoid(ground, single_state());
    case MonoidKind::Idempotent:
      if (!params.relation) throw ValidationError("idempotent monoid needs a relation");
      require_same_ground(ground, params.relation->ground(), "idempotent generator");
      return idempotent_monoid(*params.relation, params.allow_non_idempotent);
    case MonoidKind::Atom: return atom_monoid(ground, single_state());
    case MonoidKind::Universal: return universal_monoid(ground);
  }
  throw ValidationError("unknown monoid kind");
}

ClosedMonoid meet(const ClosedMonoid& a, const ClosedMonoid& b) {
  require_same_ground(a.ground(), b.ground(), "meet");
  std::vector<BinaryRelation> unions;
  unions.reserve(a.minimal_members().size() * b.minimal_members().size());
  for (const auto& x : a.minimal_members())
    for (const auto& y : b.minimal_members()) unions.push_back(unite(x, y));
  return ClosedMonoid(a.ground(), minimize(std::move(unions)));
}

ClosedMonoid join(const ClosedMonoid& a, const ClosedMonoid& b) {
  require_same_ground(a.ground(), b.ground(), "join");
  std::vector<BinaryRelation> gens = a.minimal_members();
  gens.insert(gens.end(), b.minimal_members().begin(), b.minimal_members().end());
  return closure(a.ground(), gens);
}

ClosedMonoid dual(const ClosedMonoid& m) {
  std::vector<BinaryRelation> inverted;
  inverted.reserve(m.minimal_members().size());
  for (const auto& r : m.minimal_members()) inverted.push_back(inverse(r));
  std::sort(inverted.begin(), inverted.end());
  return ClosedMonoid(m.ground(), std::move(inverted));
}

bool is_self_dual(const ClosedMonoid& m) { return dual(m) == m; }

bool all_have_fixed_point(const ClosedMonoid& m) {
  const auto& members = m.minimal_members();
  return std::all_of(members.begin(), members.end(), [](const auto& r) { return has_fixed_point(r); });
}

ClosedCheck validate_closed(const GroundSet& ground, std::span<const BinaryRelation> generators) {
  for (const auto& g : generators) require_same_ground(ground, g.ground(), "validate_closed");
  const auto minimal = minimize({generators.begin(), generators.end()});
  const auto id = BinaryRelation::identity(ground);
  if (!dominated(minimal, id)) return {false, Axiom::Identity, {id}};
  for (const auto& a : minimal)
    for (const auto& b : minimal) {
      auto product = compose(a, b);
      if (!dominated(minimal, product)) return {false, Axiom::Composition, {a, b, std::move(product)}};
    }
  return {};
}

ClosedCheck validate_closed(const GroundSet& ground, const std::function<bool(const BinaryRelation&)>& member) {
  const std::size_t n = ground.size();
  if (n > 3) throw StructuralError("predicate validation enumerates all relations and needs |Y| <= 3");
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<BinaryRelation> members;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto rel = BinaryRelation::from_code(ground, code);
    if (member(rel)) members.push_back(std::move(rel));
  }
  const auto id = BinaryRelation::identity(ground);
  if (!member(id)) return {false, Axiom::Identity, {id}};
  for (const auto& r : members)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (r.test(i, j)) continue;
        auto bigger = r.with_pair(i, j);
        if (!member(bigger)) return {false, Axiom::UpClosure, {r, std::move(bigger)}};
      }
  for (const auto& a : members)
    for (const auto& b : members) {
      auto product = compose(a, b);
      if (!member(product)) return {false, Axiom::Composition, {a, b, std::move(product)}};
    }
  return {};
}

std::string signature(const ClosedMonoid& m) {
  std::string out;
  for (const auto& r : m.minimal_members()) {
    if (!out.empty()) out += " | ";
    out += r.to_string();
  }
  return out;
}

}  // namespace ordpref
