#pragma once

// Closed submonoids of the monoid of all binary relations on a state set.
//
// A closed submonoid contains the identity, is closed under composition and is
// upward closed under inclusion. Being an up-set, it is stored as the antichain
// of its inclusion-minimal members; membership of r means some minimal member
// is a subset of r. Composition is monotone in both arguments, so closure
// under composition only has to be checked on minimal members.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordpref/relation.hpp"

namespace ordpref {

class ClosedMonoid {
 public:
  /// Minimizes the given family and validates the monoid axioms on it.
  /// Throws ValidationError when the up-set is not a closed submonoid.
  static ClosedMonoid from_antichain(const GroundSet& ground, std::vector<BinaryRelation> members);

  const GroundSet& ground() const { return ground_; }
  /// Inclusion-minimal members, sorted.
  const std::vector<BinaryRelation>& minimal_members() const { return minimal_; }

  bool contains(const BinaryRelation& rel) const;
  /// Monoid inclusion: every minimal member of *this belongs to other.
  bool is_subset_of(const ClosedMonoid& other) const;

  friend bool operator==(const ClosedMonoid& a, const ClosedMonoid& b) {
    return a.ground_ == b.ground_ && a.minimal_ == b.minimal_;
  }
  friend bool operator<(const ClosedMonoid& a, const ClosedMonoid& b) { return a.minimal_ < b.minimal_; }

 private:
  ClosedMonoid(GroundSet ground, std::vector<BinaryRelation> minimal)
      : ground_(std::move(ground)), minimal_(std::move(minimal)) {}

  friend ClosedMonoid closure(const GroundSet&, std::span<const BinaryRelation>);
  friend ClosedMonoid meet(const ClosedMonoid&, const ClosedMonoid&);
  friend ClosedMonoid dual(const ClosedMonoid&);
  friend ClosedMonoid unchecked_monoid(const GroundSet&, std::vector<BinaryRelation>);

  GroundSet ground_;
  std::vector<BinaryRelation> minimal_;
};

/// Sorted, deduplicated inclusion-minimal elements of the family.
std::vector<BinaryRelation> minimize(std::vector<BinaryRelation> family);

/// Least closed submonoid containing the generators (and the identity).
ClosedMonoid closure(const GroundSet& ground, std::span<const BinaryRelation> generators);

/// Trusts the caller that the minimized family is already closed. Used by
/// enumeration code that has verified closure by other means.
ClosedMonoid unchecked_monoid(const GroundSet& ground, std::vector<BinaryRelation> members);

enum class MonoidKind {
  Reflexive,   // all reflexive relations; yields Pareto domination
  Surjective,  // second projection is everything; beta domination
  Total,       // first projection is everything; dual beta domination
  BetaBoth,    // surjective and total
  Filter,      // diagonal covers a fixed set of states
  Dictator,    // filter on a single state
  Idempotent,  // generated by an idempotent relation
  Atom,        // generated by Y×Y minus one diagonal pair
  Universal,   // every relation
};

struct MonoidParams {
  IndexSet states;                          // Filter: the base set; Dictator/Atom: one state
  std::optional<BinaryRelation> relation;   // Idempotent
  bool allow_non_idempotent = false;        // Idempotent: fall back to general closure
};

ClosedMonoid canonical(const GroundSet& ground, MonoidKind kind, const MonoidParams& params = {});

ClosedMonoid reflexive_monoid(const GroundSet& ground);
ClosedMonoid surjective_monoid(const GroundSet& ground);
ClosedMonoid total_monoid(const GroundSet& ground);
ClosedMonoid beta_both_monoid(const GroundSet& ground);
ClosedMonoid filter_monoid(const GroundSet& ground, IndexSet base);
ClosedMonoid dictator_monoid(const GroundSet& ground, std::size_t state);
ClosedMonoid idempotent_monoid(const BinaryRelation& sigma, bool allow_non_idempotent = false);
ClosedMonoid atom_monoid(const GroundSet& ground, std::size_t state);
ClosedMonoid universal_monoid(const GroundSet& ground);

ClosedMonoid meet(const ClosedMonoid& a, const ClosedMonoid& b);
ClosedMonoid join(const ClosedMonoid& a, const ClosedMonoid& b);

/// Monoid of inverses of members.
ClosedMonoid dual(const ClosedMonoid& m);
bool is_self_dual(const ClosedMonoid& m);

/// Every member has a fixed point. Fixed points persist upward, so it is
/// enough to look at the minimal members.
bool all_have_fixed_point(const ClosedMonoid& m);

/// Axiom numbering: composition, identity, up-closure.
enum class Axiom { Composition = 1, Identity = 2, UpClosure = 3 };

struct ClosedCheck {
  bool valid = true;
  std::optional<Axiom> violated;
  /// Composition: the two factors and their product. Identity: the identity.
  /// UpClosure: the member and the missing superset.
  std::vector<BinaryRelation> witnesses;

  explicit operator bool() const { return valid; }
};

/// Checks the up-set generated by a family of relations.
ClosedCheck validate_closed(const GroundSet& ground, std::span<const BinaryRelation> generators);

/// Checks an arbitrary membership predicate by enumerating every relation.
/// Needs |Y| <= 3.
ClosedCheck validate_closed(const GroundSet& ground,
                            const std::function<bool(const BinaryRelation&)>& member);

/// Minimal members joined with " | ".
std::string signature(const ClosedMonoid& m);

}  // namespace ordpref
