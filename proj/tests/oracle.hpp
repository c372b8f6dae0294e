#pragma once

// Brute-force reference implementations on plain boolean matrices. Nothing in
// here calls into the library except for converting values at the boundary.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ordpref/dmp.hpp"
#include "ordpref/lattice.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix zeros(std::size_t n) { return Matrix(n, std::vector<bool>(n, false)); }

inline Matrix identity(std::size_t n) {
  auto m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return m;
}

inline Matrix from_code(std::size_t n, std::uint64_t code) {
  auto m = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (code >> (i * n + j)) & 1u;
  return m;
}

inline std::uint64_t to_code(const Matrix& m) {
  std::uint64_t code = 0;
  const auto n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j]) code |= std::uint64_t{1} << (i * n + j);
  return code;
}

inline Matrix to_matrix(const ordpref::BinaryRelation& r) {
  auto m = zeros(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = r.test(i, j);
  return m;
}

inline ordpref::BinaryRelation to_relation(const ordpref::GroundSet& g, const Matrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j]) pairs.emplace_back(i, j);
  return ordpref::BinaryRelation::from_pairs(g, pairs);
}

/// (i, k) iff first(i, j) and then(j, k) for some j.
inline Matrix compose(const Matrix& first, const Matrix& then) {
  const auto n = first.size();
  auto out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (first[i][j] && then[j][k]) out[i][k] = true;
  return out;
}

inline Matrix transpose(const Matrix& m) {
  auto out = zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[j][i] = m[i][j];
  return out;
}

inline bool subset(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] && !b[i][j]) return false;
  return true;
}

inline bool reflexive(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m[i][i]) return false;
  return true;
}

inline bool transitive(const Matrix& m) { return subset(compose(m, m), m); }

inline bool antisymmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && m[i][j] && m[j][i]) return false;
  return true;
}

/// Every column has an entry.
inline bool surjective(const Matrix& m) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < m.size(); ++i) hit = hit || m[i][j];
    if (!hit) return false;
  }
  return true;
}

/// Every row has an entry.
inline bool total(const Matrix& m) { return surjective(transpose(m)); }

/// Repeated squaring with the identity until nothing changes.
inline Matrix reflexive_transitive_closure(Matrix m) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = true;
  while (true) {
    auto next = compose(m, m);
    if (next == m) return m;
    m = next;
  }
}

struct Poset {
  std::string name;
  Matrix leq;
  std::size_t size() const { return leq.size(); }
};

inline Poset make_poset(std::string name, std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> less) {
  auto m = zeros(n);
  for (auto [a, b] : less) m[a][b] = true;
  return {std::move(name), reflexive_transitive_closure(std::move(m))};
}

/// Small posets used for exhaustive sweeps.
inline std::vector<Poset> poset_catalog() {
  return {
      make_poset("chain1", 1, {}),
      make_poset("chain2", 2, {{0, 1}}),
      make_poset("chain3", 3, {{0, 1}, {1, 2}}),
      make_poset("antichain2", 2, {}),
      make_poset("antichain3", 3, {}),
      make_poset("V", 3, {{0, 1}, {0, 2}}),
      make_poset("Lambda", 3, {{0, 2}, {1, 2}}),
      make_poset("diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
  };
}

/// A random partial order: random edges oriented along index order, then closed.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double density = 0.4) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(rng)) less.emplace_back(a, b);
  // Shuffle labels so that index order is not always a linear extension.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : less) {
    a = perm[a];
    b = perm[b];
  }
  return make_poset("random", n, less);
}

inline ordpref::PartialOrder to_order(const Poset& p, const std::string& prefix = "a") {
  const auto g = ordpref::GroundSet::indexed(prefix, p.size());
  return ordpref::PartialOrder::from_relation(to_relation(g, p.leq));
}

/// Plain game table: table[x][y] is an outcome index.
struct Game {
  Poset order;
  std::vector<std::vector<std::size_t>> table;

  std::size_t strategies() const { return table.size(); }
  std::size_t states() const { return table.empty() ? 0 : table[0].size(); }
  bool leq(std::size_t x1, std::size_t y1, std::size_t x2, std::size_t y2) const {
    return order.leq[table[x1][y1]][table[x2][y2]];
  }
};

inline ordpref::Dmp to_dmp(const Game& g) {
  std::vector<std::size_t> flat;
  for (const auto& row : g.table) flat.insert(flat.end(), row.begin(), row.end());
  return ordpref::Dmp(ordpref::GroundSet::indexed("x", g.strategies()), ordpref::GroundSet::indexed("y", g.states()),
                      to_order(g.order), std::move(flat));
}

inline Game random_game(std::mt19937& rng, const Poset& order, std::size_t nx, std::size_t ny) {
  std::uniform_int_distribution<std::size_t> pick(0, order.size() - 1);
  Game g{order, std::vector<std::vector<std::size_t>>(nx, std::vector<std::size_t>(ny))};
  for (auto& row : g.table)
    for (auto& v : row) v = pick(rng);
  return g;
}

/// {(y1, y2) | F(x1, y1) <= F(x2, y2)}.
inline Matrix state_preference(const Game& g, std::size_t x1, std::size_t x2) {
  auto m = zeros(g.states());
  for (std::size_t y1 = 0; y1 < g.states(); ++y1)
    for (std::size_t y2 = 0; y2 < g.states(); ++y2) m[y1][y2] = g.leq(x1, y1, x2, y2);
  return m;
}

template <class Pred>
Matrix strategy_matrix(const Game& g, Pred pred) {
  auto m = zeros(g.strategies());
  for (std::size_t x1 = 0; x1 < g.strategies(); ++x1)
    for (std::size_t x2 = 0; x2 < g.strategies(); ++x2) m[x1][x2] = pred(x1, x2);
  return m;
}

inline Matrix pareto(const Game& g) {
  return strategy_matrix(g, [&](auto x1, auto x2) {
    for (std::size_t y = 0; y < g.states(); ++y)
      if (!g.leq(x1, y, x2, y)) return false;
    return true;
  });
}

inline Matrix strict_pareto(const Game& g) {
  return strategy_matrix(g, [&](auto x1, auto x2) {
    for (std::size_t y = 0; y < g.states(); ++y)
      if (!g.leq(x1, y, x2, y) || g.table[x1][y] == g.table[x2][y]) return false;
    return true;
  });
}

/// for all y1 exists y2: F(x1, y2) <= F(x2, y1).
inline Matrix beta(const Game& g) {
  return strategy_matrix(g, [&](auto x1, auto x2) {
    for (std::size_t y1 = 0; y1 < g.states(); ++y1) {
      bool found = false;
      for (std::size_t y2 = 0; y2 < g.states(); ++y2) found = found || g.leq(x1, y2, x2, y1);
      if (!found) return false;
    }
    return true;
  });
}

/// for all y1 exists y2: F(x1, y1) <= F(x2, y2).
inline Matrix dual_beta(const Game& g) {
  return strategy_matrix(g, [&](auto x1, auto x2) {
    for (std::size_t y1 = 0; y1 < g.states(); ++y1) {
      bool found = false;
      for (std::size_t y2 = 0; y2 < g.states(); ++y2) found = found || g.leq(x1, y1, x2, y2);
      if (!found) return false;
    }
    return true;
  });
}

inline Matrix both(const Matrix& a, const Matrix& b) {
  auto m = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j] && b[i][j];
  return m;
}

/// Pareto pairs plus every pair whose state-preference contains sigma.
inline Matrix idempotent_formula(const Game& g, const Matrix& sigma) {
  const auto par = pareto(g);
  return strategy_matrix(g, [&](auto x1, auto x2) { return par[x1][x2] || subset(sigma, state_preference(g, x1, x2)); });
}

/// V_x = {a | a <= F(x, y) for every y}.
inline std::vector<std::size_t> guaranteed(const Game& g, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order.size(); ++a) {
    bool below = true;
    for (std::size_t y = 0; y < g.states(); ++y) below = below && g.order.leq[a][g.table[x][y]];
    if (below) out.push_back(a);
  }
  return out;
}

/// Every family of relations on two states, as a 16-bit membership mask, that
/// contains the identity, is upward closed and closed under composition.
inline std::vector<std::uint32_t> closed_families_two_states() {
  std::vector<Matrix> rel(16);
  for (std::uint64_t c = 0; c < 16; ++c) rel[c] = from_code(2, c);
  const auto id = to_code(identity(2));
  std::vector<std::uint32_t> out;
  for (std::uint32_t fam = 0; fam < (1u << 16); ++fam) {
    auto in = [&](std::uint64_t c) { return (fam >> c) & 1u; };
    if (!in(id)) continue;
    bool ok = true;
    for (std::uint64_t a = 0; a < 16 && ok; ++a) {
      if (!in(a)) continue;
      for (std::uint64_t b = 0; b < 16 && ok; ++b) {
        if (subset(rel[a], rel[b]) && !in(b)) ok = false;
        if (in(b) && !in(to_code(compose(rel[a], rel[b])))) ok = false;
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

/// Membership mask of a library monoid over two states.
inline std::uint32_t family_mask(const ordpref::ClosedMonoid& m) {
  std::uint32_t fam = 0;
  for (std::uint64_t c = 0; c < 16; ++c)
    if (m.contains(ordpref::BinaryRelation::from_code(m.ground(), c))) fam |= 1u << c;
  return fam;
}

}  // namespace oracle
