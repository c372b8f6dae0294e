#pragma once

// Decision making problems G = (X, Y, A, ω, F) and the strategy preferences
// derived from them.
//
// Orientation: (x1, x2) in a preference means x2 is at least as preferable as x1.

#include <optional>
#include <utility>
#include <vector>

#include "ordpref/monoid.hpp"
#include "ordpref/order.hpp"
#include "ordpref/relation.hpp"

namespace ordpref {

using StrategyPair = std::pair<std::size_t, std::size_t>;

class Dmp {
 public:
  /// table is row-major: table[x * |Y| + y] = F(x, y).
  Dmp(GroundSet strategies, GroundSet states, PartialOrder outcomes, std::vector<std::size_t> table);

  const GroundSet& strategies() const { return strategies_; }
  const GroundSet& states() const { return states_; }
  const GroundSet& outcome_set() const { return outcomes_.ground(); }
  const PartialOrder& outcomes() const { return outcomes_; }
  const std::vector<std::size_t>& table() const { return table_; }

  std::size_t at(std::size_t x, std::size_t y) const { return table_[x * states_.size() + y]; }

  friend bool operator==(const Dmp&, const Dmp&) = default;

 private:
  GroundSet strategies_;
  GroundSet states_;
  PartialOrder outcomes_;
  std::vector<std::size_t> table_;
};

/// Preorder on a strategy set.
class Preference {
 public:
  /// Throws ValidationError unless rel is reflexive and transitive.
  explicit Preference(BinaryRelation rel);

  const GroundSet& ground() const { return rel_.ground(); }
  const BinaryRelation& rel() const { return rel_; }

  /// x2 is at least as preferable as x1.
  bool prefers(std::size_t x1, std::size_t x2) const { return rel_.test(x1, x2); }

  /// Strategies with nothing strictly above them.
  std::vector<std::size_t> maximal() const;
  /// Strategies above every other one.
  std::vector<std::size_t> greatest() const;
  /// Classes of mutually preferred strategies, in order of first member.
  std::vector<IndexSet> equivalence_classes() const;

  friend bool operator==(const Preference&, const Preference&) = default;

 private:
  BinaryRelation rel_;
};

OutcomeMap f_star(const Dmp& g, std::size_t x);

Preference pareto(const Dmp& g);
/// (x1, x2) when F(x1, y) < F(x2, y) for every state.
BinaryRelation strict_pareto(const Dmp& g);

/// {(y1, y2) | F(x1, y1) <= F(x2, y2)}.
BinaryRelation state_preference(const Dmp& g, std::size_t x1, std::size_t x2);

/// (x1, x2) is derived iff the state-preference for (x1, x2) is in the monoid.
Preference derive(const Dmp& g, const ClosedMonoid& monoid);
/// The same relation without the preorder validation, for checkers that
/// report rather than throw.
BinaryRelation derive_relation(const Dmp& g, const ClosedMonoid& monoid);

/// Quantifier forms, independent of the monoid machinery.
/// beta:      for every y1 there is y2 with F(x1, y2) <= F(x2, y1)
/// dual beta: for every y1 there is y2 with F(x1, y1) <= F(x2, y2)
/// both:      the conjunction of the two
Preference beta_explicit(const Dmp& g);
Preference dual_beta_explicit(const Dmp& g);
Preference beta_both_explicit(const Dmp& g);

struct AlphaResult {
  /// V_x: outcomes below every outcome of row x.
  std::vector<IndexSet> guaranteed;
  /// x1 <= x2 iff V_x1 ⊆ V_x2.
  Preference preference;
  std::vector<std::size_t> greatest;
};
AlphaResult alpha(const Dmp& g);

struct CharacteristicSets {
  IndexSet lower;  // union of V_x
  IndexSet upper;  // intersection of U_y
  bool has_generalized_value = false;
};
CharacteristicSets characteristic_sets(const Dmp& g);

/// Situations (x0, y0) with F(x, y0) <= F(x0, y0) <= F(x0, y) for all x, y.
std::vector<StrategyPair> saddle_points(const Dmp& g);

/// Players swap roles and the order is reversed.
Dmp dualize(const Dmp& g);

/// Isotone outcome map f : A -> B between two problems sharing X and Y with H = f ∘ F.
struct Morphism {
  Dmp source;
  Dmp target;
  std::vector<std::size_t> map;
};

class MorphismError : public Error {
 public:
  using Error::Error;
};

/// Validates isotonicity, H = f ∘ F and shared strategy/state sets.
Morphism make_morphism(Dmp source, Dmp target, std::vector<std::size_t> map);
/// Builds the image problem (X, Y, B, δ, f ∘ F).
Morphism apply_morphism(const Dmp& g, std::vector<std::size_t> map, const PartialOrder& target_order);

struct PairVerdict {
  bool holds = true;
  std::optional<StrategyPair> witness;
  explicit operator bool() const { return holds; }
};

/// derive(source) ⊆ derive(target).
PairVerdict check_functoriality(const Morphism& f, const ClosedMonoid& monoid);

struct RegularityVerdict {
  bool holds = true;
  /// False when the two state-preferences differ; holds is then vacuous.
  bool premise_held = false;
};
RegularityVerdict check_regularity(const Dmp& g, const Dmp& other, StrategyPair first, StrategyPair second,
                                   const ClosedMonoid& monoid);

/// {y | F(x1, y) <= F(x2, y)}: the diagonal of the state-preference.
IndexSet agreement_states(const Dmp& g, std::size_t x1, std::size_t x2);

/// Fails when pref holds (x1, x2) although x1 strictly Pareto-dominates x2.
/// The witness is that pair of pref.
PairVerdict is_suitable(const Dmp& g, const Preference& pref);

}  // namespace ordpref
