#include "ordpref/order.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ordpref {

namespace {

// Shortest path from -> to over the input comparabilities; empty if none.
std::vector<std::size_t> find_path(const BinaryRelation& edges, std::size_t from, std::size_t to) {
  std::vector<std::size_t> parent(edges.size(), edges.size());
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : edges.row(u).indices()) {
      if (parent[v] != edges.size()) continue;
      parent[v] = u;
      if (v == to) {
        std::vector<std::size_t> path{to};
        for (auto w = to; w != from;) path.push_back(w = parent[w]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(v);
    }
  }
  return {};
}

}  // namespace

PartialOrder PartialOrder::from_comparabilities(const GroundSet& ground,
                                                std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const auto edges = BinaryRelation::from_pairs(ground, pairs);
  const auto closed = unite(transitive_closure(edges), BinaryRelation::identity(ground));
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (auto j : closed.row(i).indices()) {
      if (j == i || !closed.test(j, i)) continue;
      auto there = find_path(edges, i, j);
      auto back = find_path(edges, j, i);
      std::string cycle = ground.label(i);
      for (std::size_t k = 1; k < there.size(); ++k) cycle += " < " + ground.label(there[k]);
      for (std::size_t k = 1; k < back.size(); ++k) cycle += " < " + ground.label(back[k]);
      throw ValidationError("antisymmetry violated by cycle " + cycle);
    }
  }
  return PartialOrder(closed);
}

PartialOrder PartialOrder::from_comparabilities(const GroundSet& ground,
                                                std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(pairs.size());
  for (const auto& [u, v] : pairs) idx.emplace_back(ground.index_of(u), ground.index_of(v));
  return from_comparabilities(ground, idx);
}

PartialOrder PartialOrder::from_relation(const BinaryRelation& leq) {
  const auto c = classify(leq);
  if (!c.reflexive) throw ValidationError("order relation is not reflexive");
  if (!c.transitive) throw ValidationError("order relation is not transitive");
  if (!c.antisymmetric) throw ValidationError("order relation is not antisymmetric");
  return PartialOrder(leq);
}

PartialOrder PartialOrder::trivial(const GroundSet& ground) {
  return PartialOrder(BinaryRelation::identity(ground));
}

PartialOrder PartialOrder::chain(const GroundSet& ground) {
  std::vector<std::uint64_t> rows(ground.size());
  const auto all = IndexSet::all(ground.size()).bits();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = all & ~((std::uint64_t{1} << i) - 1);
  return PartialOrder(BinaryRelation(ground, std::move(rows)));
}

PartialOrder PartialOrder::dual() const { return PartialOrder(inverse(leq_)); }

OutcomeMap::OutcomeMap(GroundSet domain, GroundSet codomain, std::vector<std::size_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (values_.size() != domain_.size())
    throw StructuralError("outcome map has " + std::to_string(values_.size()) + " entries for " +
                          std::to_string(domain_.size()) + " states");
  for (auto v : values_)
    if (v >= codomain_.size()) throw StructuralError("outcome map value out of range");
}

BinaryRelation strict_part(const PartialOrder& order) {
  return subtract(order.leq(), BinaryRelation::identity(order.ground()));
}

namespace {

void require_shape(const OutcomeMap& phi, const OutcomeMap& psi, const PartialOrder& order) {
  require_same_ground(phi.domain(), psi.domain(), "outcome maps");
  require_same_ground(phi.codomain(), order.ground(), "outcome map codomain");
  require_same_ground(psi.codomain(), order.ground(), "outcome map codomain");
}

}  // namespace

bool pointwise_leq(const OutcomeMap& lower, const OutcomeMap& upper, const PartialOrder& order) {
  require_shape(lower, upper, order);
  for (std::size_t y = 0; y < lower.domain().size(); ++y)
    if (!order.less_equal(lower[y], upper[y])) return false;
  return true;
}

BinaryRelation pullback(const OutcomeMap& phi, const OutcomeMap& psi, const PartialOrder& order) {
  require_shape(phi, psi, order);
  const std::size_t n = phi.domain().size();
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t y1 = 0; y1 < n; ++y1)
    for (std::size_t y2 = 0; y2 < n; ++y2)
      if (order.less_equal(phi[y1], psi[y2])) rows[y1] |= std::uint64_t{1} << y2;
  return BinaryRelation(phi.domain(), std::move(rows));
}

PartialOrder product_order(const PartialOrder& left, const PartialOrder& right) {
  const std::size_t m = left.size(), k = right.size();
  if (m * k > kMaxGroundSize) throw StructuralError("product order exceeds the maximum ground size");
  std::vector<std::string> labels;
  labels.reserve(m * k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < k; ++b)
      labels.push_back('(' + left.ground().label(a) + ',' + right.ground().label(b) + ')');
  GroundSet ground(std::move(labels));
  std::vector<std::uint64_t> rows(m * k, 0);
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t b1 = 0; b1 < k; ++b1)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b2 = 0; b2 < k; ++b2)
          if (left.less_equal(a1, a2) && right.less_equal(b1, b2))
            rows[a1 * k + b1] |= std::uint64_t{1} << (a2 * k + b2);
  return PartialOrder::from_relation(BinaryRelation(ground, std::move(rows)));
}

namespace {

IndexSet bounded(const BinaryRelation& leq, IndexSet subset, BoundMode mode) {
  IndexSet out;
  for (std::size_t a = 0; a < leq.size(); ++a) {
    const auto above = leq.row(a);
    const bool keep = mode == BoundMode::LowerBounds ? subset.is_subset_of(above) : !(subset & above).empty();
    if (keep) out.insert(a);
  }
  return out;
}

}  // namespace

IndexSet down_set(const PartialOrder& order, IndexSet subset, BoundMode mode) {
  return bounded(order.leq(), subset, mode);
}

IndexSet up_set(const PartialOrder& order, IndexSet subset, BoundMode mode) {
  return bounded(inverse(order.leq()), subset, mode);
}

std::size_t longest_chain(const PartialOrder& order) {
  const auto strict = strict_part(order);
  std::vector<std::size_t> memo(order.size(), 0);
  // Longest chain starting at a; the strict part is acyclic.
  std::function<std::size_t(std::size_t)> from = [&](std::size_t a) -> std::size_t {
    if (memo[a] != 0) return memo[a];
    std::size_t best = 0;
    for (auto b : strict.row(a).indices()) best = std::max(best, from(b));
    return memo[a] = best + 1;
  };
  std::size_t best = 0;
  for (std::size_t a = 0; a < order.size(); ++a) best = std::max(best, from(a));
  return best;
}

bool has_strict_chain(const PartialOrder& order, std::size_t k) { return k <= longest_chain(order); }

Correspondence::Correspondence(GroundSet source, GroundSet target, std::vector<std::uint64_t> rows)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)) {
  if (rows_.size() != source_.size()) throw StructuralError("correspondence row count mismatch");
  const auto mask = IndexSet::all(target_.size()).bits();
  for (auto r : rows_)
    if ((r & ~mask) != 0) throw StructuralError("correspondence references an element outside its target");
}

Correspondence Correspondence::graph(const OutcomeMap& map) {
  std::vector<std::uint64_t> rows(map.domain().size());
  for (std::size_t y = 0; y < rows.size(); ++y) rows[y] = std::uint64_t{1} << map[y];
  return Correspondence(map.domain(), map.codomain(), std::move(rows));
}

Correspondence Correspondence::of(const BinaryRelation& rel) {
  return Correspondence(rel.ground(), rel.ground(), {rel.rows().begin(), rel.rows().end()});
}

bool Correspondence::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](auto r) { return r == 0; });
}

BinaryRelation Correspondence::as_relation() const {
  require_same_ground(source_, target_, "correspondence as relation");
  return BinaryRelation(source_, rows_);
}

Correspondence compose(const Correspondence& first, const Correspondence& then) {
  require_same_ground(first.target_, then.source_, "compose");
  std::vector<std::uint64_t> rows(first.rows_.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::uint64_t m = first.rows_[i]; m != 0; m &= m - 1) rows[i] |= then.rows_[std::countr_zero(m)];
  return Correspondence(first.source_, then.target_, std::move(rows));
}

Correspondence inverse(const Correspondence& rel) {
  std::vector<std::uint64_t> rows(rel.target_.size(), 0);
  for (std::size_t i = 0; i < rel.rows_.size(); ++i)
    for (std::uint64_t m = rel.rows_[i]; m != 0; m &= m - 1) rows[std::countr_zero(m)] |= std::uint64_t{1} << i;
  return Correspondence(rel.target_, rel.source_, std::move(rows));
}

BinaryRelation pullback_by_composition(const OutcomeMap& phi, const OutcomeMap& psi, const BinaryRelation& rel) {
  const auto inner = compose(Correspondence::of(rel), inverse(Correspondence::graph(psi)));
  return compose(Correspondence::graph(phi), inner).as_relation();
}

}  // namespace ordpref
