#include "ordpref/relation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ordpref {

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty()) throw StructuralError("ground set must not be empty");
  if (labels.size() > kMaxGroundSize)
    throw StructuralError("ground set of size " + std::to_string(labels.size()) +
                          " exceeds the supported maximum of " + std::to_string(kMaxGroundSize));
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw StructuralError("ground set labels must be non-empty");
    if (!seen.insert(label).second) throw StructuralError("duplicate label '" + label + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::indexed(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

std::size_t GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw StructuralError("unknown label '" + std::string(label) + "'");
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::string to_string(IndexSet set, const GroundSet& ground) {
  std::string out = "{";
  bool first = true;
  for (auto i : set.indices()) {
    if (!first) out += ',';
    out += ground.label(i);
    first = false;
  }
  return out + "}";
}

BinaryRelation::BinaryRelation(GroundSet ground)
    : ground_(std::move(ground)), rows_(ground_.size(), 0) {}

BinaryRelation::BinaryRelation(GroundSet ground, std::vector<std::uint64_t> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
  if (rows_.size() != ground_.size())
    throw StructuralError("relation has " + std::to_string(rows_.size()) +
                          " rows over a ground set of size " + std::to_string(ground_.size()));
  const auto mask = IndexSet::all(ground_.size()).bits();
  for (auto r : rows_)
    if ((r & ~mask) != 0) throw StructuralError("relation row references an element outside the ground set");
}

BinaryRelation BinaryRelation::identity(const GroundSet& ground) {
  std::vector<std::uint64_t> rows(ground.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = std::uint64_t{1} << i;
  return BinaryRelation(ground, std::move(rows));
}

BinaryRelation BinaryRelation::full(const GroundSet& ground) {
  return BinaryRelation(ground, std::vector<std::uint64_t>(ground.size(), IndexSet::all(ground.size()).bits()));
}

BinaryRelation BinaryRelation::from_pairs(const GroundSet& ground,
                                          std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<std::uint64_t> rows(ground.size(), 0);
  for (auto [i, j] : pairs) {
    if (i >= ground.size() || j >= ground.size()) throw StructuralError("pair index out of range");
    rows[i] |= std::uint64_t{1} << j;
  }
  return BinaryRelation(ground, std::move(rows));
}

BinaryRelation BinaryRelation::from_labels(const GroundSet& ground,
                                           std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) idx.emplace_back(ground.index_of(a), ground.index_of(b));
  return from_pairs(ground, idx);
}

BinaryRelation BinaryRelation::from_code(const GroundSet& ground, std::uint64_t code) {
  const std::size_t n = ground.size();
  if (n * n > 64) throw StructuralError("relation codes need n*n <= 64");
  std::vector<std::uint64_t> rows(n);
  const auto mask = IndexSet::all(n).bits();
  for (std::size_t i = 0; i < n; ++i) rows[i] = (code >> (i * n)) & mask;
  if (n * n < 64 && (code >> (n * n)) != 0) throw StructuralError("relation code out of range");
  return BinaryRelation(ground, std::move(rows));
}

std::size_t BinaryRelation::count() const {
  std::size_t c = 0;
  for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

bool BinaryRelation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](auto r) { return r == 0; });
}

std::uint64_t BinaryRelation::code() const {
  const std::size_t n = size();
  if (n * n > 64) throw StructuralError("relation codes need n*n <= 64");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) code |= rows_[i] << (i * n);
  return code;
}

BinaryRelation BinaryRelation::with_pair(std::size_t i, std::size_t j) const {
  auto rows = rows_;
  rows.at(i) |= std::uint64_t{1} << j;
  return BinaryRelation(ground_, std::move(rows));
}

BinaryRelation BinaryRelation::without_pair(std::size_t i, std::size_t j) const {
  auto rows = rows_;
  rows.at(i) &= ~(std::uint64_t{1} << j);
  return BinaryRelation(ground_, std::move(rows));
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (auto j : IndexSet(rows_[i]).indices()) out.emplace_back(i, j);
  return out;
}

std::string BinaryRelation::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto [i, j] : pairs()) {
    if (!first) out += ',';
    out += '(' + ground_.label(i) + ',' + ground_.label(j) + ')';
    first = false;
  }
  return out + "}";
}

void require_same_ground(const GroundSet& a, const GroundSet& b, std::string_view what) {
  if (!(a == b)) throw StructuralError(std::string(what) + ": ground sets differ");
}

BinaryRelation compose(const BinaryRelation& first, const BinaryRelation& then) {
  require_same_ground(first.ground(), then.ground(), "compose");
  const auto a = first.rows();
  const auto b = then.rows();
  std::vector<std::uint64_t> rows(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::uint64_t m = a[i]; m != 0; m &= m - 1) rows[i] |= b[std::countr_zero(m)];
  return BinaryRelation(first.ground(), std::move(rows));
}

BinaryRelation inverse(const BinaryRelation& rel) {
  const auto a = rel.rows();
  std::vector<std::uint64_t> rows(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::uint64_t m = a[i]; m != 0; m &= m - 1) rows[std::countr_zero(m)] |= std::uint64_t{1} << i;
  return BinaryRelation(rel.ground(), std::move(rows));
}

namespace {

template <class Op>
BinaryRelation zip_rows(const BinaryRelation& a, const BinaryRelation& b, std::string_view what, Op op) {
  require_same_ground(a.ground(), b.ground(), what);
  std::vector<std::uint64_t> rows(a.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = op(a.rows()[i], b.rows()[i]);
  return BinaryRelation(a.ground(), std::move(rows));
}

}  // namespace

BinaryRelation unite(const BinaryRelation& a, const BinaryRelation& b) {
  return zip_rows(a, b, "union", [](auto x, auto y) { return x | y; });
}

BinaryRelation intersect(const BinaryRelation& a, const BinaryRelation& b) {
  return zip_rows(a, b, "intersection", [](auto x, auto y) { return x & y; });
}

BinaryRelation subtract(const BinaryRelation& a, const BinaryRelation& b) {
  return zip_rows(a, b, "difference", [](auto x, auto y) { return x & ~y; });
}

bool is_subset(const BinaryRelation& a, const BinaryRelation& b) {
  require_same_ground(a.ground(), b.ground(), "subset test");
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a.rows()[i] & ~b.rows()[i]) != 0) return false;
  return true;
}

Projections projections(const BinaryRelation& rel) {
  Projections p;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const auto r = rel.rows()[i];
    if (r != 0) p.first.insert(i);
    p.second = p.second | IndexSet(r);
    if (rel.test(i, i)) p.diagonal.insert(i);
  }
  return p;
}

bool is_reflexive(const BinaryRelation& rel) {
  for (std::size_t i = 0; i < rel.size(); ++i)
    if (!rel.test(i, i)) return false;
  return true;
}

bool is_transitive(const BinaryRelation& rel) { return is_subset(compose(rel, rel), rel); }

bool is_antisymmetric(const BinaryRelation& rel) {
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (auto j : rel.row(i).indices())
      if (j != i && rel.test(j, i)) return false;
  return true;
}

Classification classify(const BinaryRelation& rel) {
  Classification c;
  const auto square = compose(rel, rel);
  const auto all = IndexSet::all(rel.size());
  const auto proj = projections(rel);
  c.reflexive = is_reflexive(rel);
  c.transitive = is_subset(square, rel);
  c.antisymmetric = is_antisymmetric(rel);
  c.idempotent = square == rel;
  c.surjective = proj.second == all;
  c.total = proj.first == all;
  c.preorder = c.reflexive && c.transitive;
  c.partial_order = c.preorder && c.antisymmetric;
  return c;
}

BinaryRelation transitive_closure(const BinaryRelation& rel) {
  // Warshall over bit rows.
  std::vector<std::uint64_t> rows(rel.rows().begin(), rel.rows().end());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
  return BinaryRelation(rel.ground(), std::move(rows));
}

bool has_fixed_point(const BinaryRelation& rel) { return !projections(rel).diagonal.empty(); }

}  // namespace ordpref
