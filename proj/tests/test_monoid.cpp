#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "ordpref/lattice.hpp"
#include "ordpref/monoid.hpp"

using namespace ordpref;

namespace {

const GroundSet kY2({"y1", "y2"});
const GroundSet kY3({"y1", "y2", "y3"});

BinaryRelation rel(const GroundSet& g, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> v(pairs);
  return BinaryRelation::from_pairs(g, v);
}

const BinaryRelation kSwap = rel(kY2, {{0, 1}, {1, 0}});

/// Membership by brute force over every relation: the up-set of the antichain.
std::set<std::uint64_t> members(const ClosedMonoid& m) {
  const auto n = m.ground().size();
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * n)); ++c) {
    const auto r = oracle::from_code(n, c);
    for (const auto& min : m.minimal_members())
      if (oracle::subset(oracle::to_matrix(min), r)) {
        out.insert(c);
        break;
      }
  }
  return out;
}

/// Least closed family containing the generators, by saturating an explicit member set.
std::set<std::uint64_t> closure_oracle(std::size_t n, const std::vector<std::uint64_t>& gens) {
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  std::set<std::uint64_t> s(gens.begin(), gens.end());
  s.insert(oracle::to_code(oracle::identity(n)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::uint64_t> next = s;
    for (auto a : s) {
      for (std::uint64_t sup = 0; sup < count; ++sup)
        if ((a & ~sup) == 0) next.insert(sup);
      for (auto b : s) next.insert(oracle::to_code(oracle::compose(oracle::from_code(n, a), oracle::from_code(n, b))));
    }
    grew = next.size() != s.size();
    s = std::move(next);
  }
  return s;
}

std::vector<ClosedMonoid> canonical_family(const GroundSet& g) {
  std::vector<ClosedMonoid> out{reflexive_monoid(g), surjective_monoid(g), total_monoid(g), beta_both_monoid(g),
                                universal_monoid(g)};
  for (std::size_t y = 0; y < g.size(); ++y) {
    out.push_back(dictator_monoid(g, y));
    if (g.size() >= 2) out.push_back(atom_monoid(g, y));
  }
  out.push_back(filter_monoid(g, IndexSet::all(g.size())));
  return out;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(kY2, {}).minimal_members() == std::vector<BinaryRelation>{BinaryRelation::identity(kY2)});
  const std::vector<BinaryRelation> empty{BinaryRelation(kY2)};
  CHECK(closure(kY2, empty) == universal_monoid(kY2));
  const std::vector<BinaryRelation> swap{kSwap};
  const auto m = closure(kY2, swap);
  CHECK(m.minimal_members().size() == 2);
  CHECK(m.contains(kSwap));
  CHECK(m.contains(BinaryRelation::identity(kY2)));
  CHECK(members(m) == closure_oracle(2, {kSwap.code()}));
}

TEST_CASE("closure matches the saturation oracle on random generators") {
  std::mt19937 rng(101);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = GroundSet::indexed("y", n);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (n * n)) - 1);
    std::uniform_int_distribution<int> how_many(0, 3);
    for (int t = 0; t < (n == 3 ? 40 : 200); ++t) {
      std::vector<std::uint64_t> codes(static_cast<std::size_t>(how_many(rng)));
      for (auto& c : codes) c = pick(rng);
      std::vector<BinaryRelation> gens;
      for (auto c : codes) gens.push_back(BinaryRelation::from_code(g, c));
      REQUIRE(members(closure(g, gens)) == closure_oracle(n, codes));
    }
  }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, 511);
  for (int t = 0; t < 300; ++t) {
    std::vector<BinaryRelation> small{BinaryRelation::from_code(kY3, pick(rng))};
    auto large = small;
    large.push_back(BinaryRelation::from_code(kY3, pick(rng)));
    const auto cs = closure(kY3, small);
    const auto cl = closure(kY3, large);
    for (const auto& g : large) REQUIRE(cl.contains(g));
    REQUIRE(cs.is_subset_of(cl));
    REQUIRE(closure(kY3, cs.minimal_members()) == cs);
  }
}

TEST_CASE("membership is upward closed") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint64_t> pick(0, 511);
  for (const auto& m : canonical_family(kY3))
    for (int t = 0; t < 300; ++t) {
      const auto r = BinaryRelation::from_code(kY3, pick(rng));
      const auto s = BinaryRelation::from_code(kY3, r.code() | pick(rng));
      if (m.contains(r)) REQUIRE(m.contains(s));
    }
}

TEST_CASE("canonical antichains at two states") {
  CHECK(reflexive_monoid(kY2).contains(BinaryRelation::identity(kY2)));
  CHECK_FALSE(reflexive_monoid(kY2).contains(rel(kY2, {{0, 1}})));

  const auto surj = surjective_monoid(kY2);
  const std::vector<BinaryRelation> expected_surj{BinaryRelation::identity(kY2), kSwap, rel(kY2, {{0, 0}, {0, 1}}),
                                                  rel(kY2, {{1, 0}, {1, 1}})};
  CHECK(surj.minimal_members() == minimize(expected_surj));
  CHECK(surj.contains(rel(kY2, {{0, 0}, {0, 1}})));

  // Minimal relations with full second projection, by enumeration.
  std::vector<BinaryRelation> oracle_min;
  for (std::uint64_t c = 0; c < 16; ++c)
    if (oracle::surjective(oracle::from_code(2, c))) oracle_min.push_back(BinaryRelation::from_code(kY2, c));
  CHECK(surj.minimal_members() == minimize(oracle_min));

  CHECK(dictator_monoid(kY2, 0).minimal_members() == std::vector<BinaryRelation>{rel(kY2, {{0, 0}})});
  CHECK(beta_both_monoid(kY2).minimal_members() == minimize({BinaryRelation::identity(kY2), kSwap}));
  CHECK(universal_monoid(kY2).minimal_members() == std::vector<BinaryRelation>{BinaryRelation(kY2)});
}

TEST_CASE("membership in surjective and total monoids follows the projections") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = GroundSet::indexed("y", n);
    const auto s = surjective_monoid(g), t = total_monoid(g), r = reflexive_monoid(g);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * n)); ++c) {
      const auto rr = BinaryRelation::from_code(g, c);
      const auto m = oracle::from_code(n, c);
      REQUIRE(s.contains(rr) == oracle::surjective(m));
      REQUIRE(t.contains(rr) == oracle::total(m));
      REQUIRE(r.contains(rr) == oracle::reflexive(m));
    }
  }
}

TEST_CASE("canonical parameter errors") {
  CHECK_THROWS_AS(idempotent_monoid(kSwap), ValidationError);
  CHECK(idempotent_monoid(kSwap, true) == closure(kY2, std::vector<BinaryRelation>{kSwap}));
  CHECK_THROWS_AS(filter_monoid(kY2, IndexSet{}), ValidationError);
  CHECK_THROWS_AS(atom_monoid(GroundSet({"y"}), 0), StructuralError);
  MonoidParams p;
  p.states = IndexSet::single(1);
  CHECK(canonical(kY2, MonoidKind::Dictator, p) == dictator_monoid(kY2, 1));
  CHECK_THROWS(canonical(kY2, MonoidKind::Idempotent));
}

TEST_CASE("every canonical monoid passes exhaustive validation") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = GroundSet::indexed("y", n);
    auto family = canonical_family(g);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * n)); ++c) {
      const auto r = BinaryRelation::from_code(g, c);
      if (compose(r, r) == r) family.push_back(idempotent_monoid(r));
    }
    for (const auto& m : family) {
      REQUIRE(validate_closed(g, m.minimal_members()).valid);
      const auto check = validate_closed(g, [&](const BinaryRelation& r) { return m.contains(r); });
      REQUIRE(check.valid);
    }
  }
}

TEST_CASE("validation reports the violated axiom") {
  const std::vector<BinaryRelation> up{rel(kY2, {{0, 1}})};
  const auto no_identity = validate_closed(kY2, up);
  CHECK_FALSE(no_identity.valid);
  CHECK(no_identity.violated == Axiom::Identity);
  CHECK(no_identity.witnesses == std::vector<BinaryRelation>{BinaryRelation::identity(kY2)});

  const std::vector<BinaryRelation> two{BinaryRelation::identity(kY2), rel(kY2, {{0, 1}})};
  const auto open = validate_closed(kY2, two);
  CHECK_FALSE(open.valid);
  CHECK(open.violated == Axiom::Composition);
  REQUIRE(open.witnesses.size() == 3);
  CHECK(open.witnesses[2] == compose(open.witnesses[0], open.witnesses[1]));
  CHECK(open.witnesses[2].empty());

  // A predicate that is not upward closed.
  const auto exact = validate_closed(kY2, [](const BinaryRelation& r) { return r == BinaryRelation::identity(r.ground()); });
  CHECK_FALSE(exact.valid);
  CHECK(exact.violated == Axiom::UpClosure);
  CHECK_THROWS_AS(ClosedMonoid::from_antichain(kY2, two), ValidationError);
}

TEST_CASE("meet and join examples") {
  CHECK(meet(surjective_monoid(kY3), total_monoid(kY3)) == beta_both_monoid(kY3));
  for (const auto& m : canonical_family(kY3)) CHECK(join(reflexive_monoid(kY3), m) == m);
  CHECK(meet(dictator_monoid(kY2, 0), dictator_monoid(kY2, 1)) == reflexive_monoid(kY2));
}

TEST_CASE("meet and join are the lattice operations on the two-state lattice") {
  const auto lattice = enumerate_exhaustive(kY2);
  const auto& e = lattice.elements;
  for (const auto& a : e)
    for (const auto& b : e) {
      const auto m = meet(a, b), j = join(a, b);
      REQUIRE(meet(b, a) == m);
      REQUIRE(join(b, a) == j);
      REQUIRE(meet(a, join(a, b)) == a);
      REQUIRE(join(a, meet(a, b)) == a);
      REQUIRE(oracle::family_mask(m) == (oracle::family_mask(a) & oracle::family_mask(b)));
      // Join is the least element of the lattice above both.
      for (const auto& c : e)
        if (a.is_subset_of(c) && b.is_subset_of(c)) REQUIRE(j.is_subset_of(c));
      REQUIRE(a.is_subset_of(j));
      REQUIRE(b.is_subset_of(j));
    }
}

TEST_CASE("duality") {
  CHECK(dual(surjective_monoid(kY3)) == total_monoid(kY3));
  CHECK(is_self_dual(reflexive_monoid(kY3)));
  for (std::size_t y = 0; y < 3; ++y) CHECK(is_self_dual(atom_monoid(kY3, y)));
  const auto lattice = enumerate_exhaustive(kY2);
  for (const auto& a : lattice.elements) {
    REQUIRE(dual(dual(a)) == a);
    for (const auto& b : lattice.elements) REQUIRE(a.is_subset_of(b) == dual(a).is_subset_of(dual(b)));
  }
}

TEST_CASE("fixed points of all members") {
  CHECK(all_have_fixed_point(dictator_monoid(kY3, 2)));
  CHECK(all_have_fixed_point(filter_monoid(kY3, IndexSet(0b101))));
  CHECK_FALSE(all_have_fixed_point(universal_monoid(kY3)));
  CHECK_FALSE(all_have_fixed_point(surjective_monoid(kY2)));
  // Brute force: every member has a fixed point iff every minimal member does.
  for (const auto& m : canonical_family(kY2)) {
    bool all = true;
    for (auto c : members(m)) all = all && has_fixed_point(BinaryRelation::from_code(kY2, c));
    REQUIRE(all == all_have_fixed_point(m));
  }
}

TEST_CASE("minimize keeps an antichain") {
  const std::vector<BinaryRelation> fam{BinaryRelation::full(kY2), BinaryRelation::identity(kY2),
                                        rel(kY2, {{0, 0}}), rel(kY2, {{0, 0}})};
  CHECK(minimize(fam) == std::vector<BinaryRelation>{rel(kY2, {{0, 0}})});
}

TEST_CASE("function-graph monoids are capped") {
  CHECK_THROWS_AS(surjective_monoid(GroundSet::indexed("y", 7)), StructuralError);
  CHECK(surjective_monoid(GroundSet::indexed("y", 4)).minimal_members().size() == 256);
}
