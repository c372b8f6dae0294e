#pragma once

// Partial orders on outcome sets and the maps Y -> A that carry states into them.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordpref/relation.hpp"

namespace ordpref {

/// Reflexive, transitive, antisymmetric relation; validated on construction.
class PartialOrder {
 public:
  /// Reflexive-transitive closure of the given comparabilities (u, v), read as u <= v.
  /// Throws ValidationError naming a cycle if two distinct elements end up equivalent.
  static PartialOrder from_comparabilities(const GroundSet& ground,
                                           std::span<const std::pair<std::size_t, std::size_t>> pairs);
  static PartialOrder from_comparabilities(const GroundSet& ground,
                                           std::span<const std::pair<std::string, std::string>> pairs);
  /// Accepts an already closed relation; throws ValidationError otherwise.
  static PartialOrder from_relation(const BinaryRelation& leq);
  static PartialOrder trivial(const GroundSet& ground);
  /// Linear order following index order.
  static PartialOrder chain(const GroundSet& ground);

  const GroundSet& ground() const { return leq_.ground(); }
  std::size_t size() const { return leq_.size(); }
  const BinaryRelation& leq() const { return leq_; }

  bool less_equal(std::size_t a, std::size_t b) const { return leq_.test(a, b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_.test(a, b); }

  /// The inverse order.
  PartialOrder dual() const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  explicit PartialOrder(BinaryRelation leq) : leq_(std::move(leq)) {}
  BinaryRelation leq_;
};

/// A map from a domain ground set (states) into a codomain ground set (outcomes).
class OutcomeMap {
 public:
  OutcomeMap(GroundSet domain, GroundSet codomain, std::vector<std::size_t> values);

  const GroundSet& domain() const { return domain_; }
  const GroundSet& codomain() const { return codomain_; }
  std::size_t operator[](std::size_t y) const { return values_[y]; }
  const std::vector<std::size_t>& values() const { return values_; }

  friend bool operator==(const OutcomeMap&, const OutcomeMap&) = default;

 private:
  GroundSet domain_;
  GroundSet codomain_;
  std::vector<std::size_t> values_;
};

/// leq minus the diagonal.
BinaryRelation strict_part(const PartialOrder& order);

/// lower(y) <= upper(y) for every y.
bool pointwise_leq(const OutcomeMap& lower, const OutcomeMap& upper, const PartialOrder& order);

/// {(y1, y2) | phi(y1) <= psi(y2)} on the common domain of phi and psi.
BinaryRelation pullback(const OutcomeMap& phi, const OutcomeMap& psi, const PartialOrder& order);

/// Componentwise order on the cartesian product; element (a, b) sits at index a*|B| + b
/// and is labelled "(a,b)".
PartialOrder product_order(const PartialOrder& left, const PartialOrder& right);

enum class BoundMode {
  LowerBounds,  // {a | a <= s for every s in S}
  Union,        // {a | a <= s for some s in S}
};

IndexSet down_set(const PartialOrder& order, IndexSet subset, BoundMode mode);
/// Mirror image of down_set: {a | s <= a for every / some s in S}.
IndexSet up_set(const PartialOrder& order, IndexSet subset, BoundMode mode);

/// Number of elements in a longest chain a1 < a2 < ... < ak.
std::size_t longest_chain(const PartialOrder& order);
bool has_strict_chain(const PartialOrder& order, std::size_t k);

/// Relation between two possibly different ground sets. Only used to express
/// pullbacks as relational products.
class Correspondence {
 public:
  Correspondence(GroundSet source, GroundSet target, std::vector<std::uint64_t> rows);

  static Correspondence graph(const OutcomeMap& map);
  static Correspondence of(const BinaryRelation& rel);

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  bool test(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  bool empty() const;

  /// Requires source == target.
  BinaryRelation as_relation() const;

  friend Correspondence compose(const Correspondence& first, const Correspondence& then);
  friend Correspondence inverse(const Correspondence& rel);

 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<std::uint64_t> rows_;
};

Correspondence compose(const Correspondence& first, const Correspondence& then);
Correspondence inverse(const Correspondence& rel);

/// psi^-1 ∘ rel ∘ phi, i.e. {(y1, y2) | (phi(y1), psi(y2)) in rel}, built by
/// relational products. Agrees with pullback() when rel is the order.
BinaryRelation pullback_by_composition(const OutcomeMap& phi, const OutcomeMap& psi,
                                       const BinaryRelation& rel);

}  // namespace ordpref
