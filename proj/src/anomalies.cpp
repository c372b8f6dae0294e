#include "ordpref/anomalies.hpp"

#include <algorithm>

#include "ordpref/dmp.hpp"
#include "ordpref/fixtures.hpp"

namespace ordpref {

namespace {

class Scenario {
 public:
  explicit Scenario(std::string name) { result_.name = std::move(name); }

  void expect(bool condition, const std::string& what) {
    result_.lines.push_back((condition ? "ok: " : "FAIL: ") + what);
    result_.passed = result_.passed && condition;
  }
  void note(const std::string& line) { result_.lines.push_back("  " + line); }

  ScenarioResult finish() { return std::move(result_); }

 private:
  ScenarioResult result_;
};

IndexSet labels_to_set(const GroundSet& ground, std::initializer_list<const char*> labels) {
  IndexSet s;
  for (const char* l : labels) s.insert(ground.index_of(l));
  return s;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string labels_of(const std::vector<std::size_t>& v, const GroundSet& ground) {
  IndexSet s;
  for (auto i : v) s.insert(i);
  return to_string(s, ground);
}

void note_guaranteed(Scenario& s, const Dmp& g, const AlphaResult& a) {
  for (std::size_t x = 0; x < g.strategies().size(); ++x)
    s.note("V_" + g.strategies().label(x) + " = " + to_string(a.guaranteed[x], g.outcome_set()));
}

ScenarioResult lattice_game() {
  Scenario s("example 1: generalized value without saddle point");
  const auto g = fixtures::example1();
  const auto& a_set = g.outcome_set();
  const auto a = alpha(g);
  note_guaranteed(s, g, a);
  s.expect(contains(a.greatest, g.strategies().index_of("x1")), "x1 is alpha-greatest for player 1");

  const auto d = dualize(g);
  const auto da = alpha(d);
  s.expect(contains(da.greatest, d.strategies().index_of("y1")), "y1 is alpha-greatest for player 2");

  const auto cs = characteristic_sets(g);
  s.note("V = " + to_string(cs.lower, a_set) + ", U = " + to_string(cs.upper, a_set));
  s.expect(cs.has_generalized_value && cs.lower == labels_to_set(a_set, {"0"}), "V = U = {0}");

  const auto saddles = saddle_points(g);
  s.expect(saddles.empty(), "no saddle points");
  const auto pair_x1_y1 = std::make_pair(g.strategies().index_of("x1"), g.states().index_of("y1"));
  s.expect(std::find(saddles.begin(), saddles.end(), pair_x1_y1) == saddles.end(), "(x1,y1) is not a saddle point");

  const auto dual_cs = characteristic_sets(d);
  s.note("V* = " + to_string(dual_cs.lower, a_set) + ", U* = " + to_string(dual_cs.upper, a_set));
  s.expect(!dual_cs.has_generalized_value, "V* != U*: the generalized value does not survive duality");
  return s.finish();
}

ScenarioResult convolution() {
  Scenario s("example 2: alpha-greatest strategy changes under a homomorphic image");
  const auto g = fixtures::example2();
  const auto before = alpha(g);
  note_guaranteed(s, g, before);
  const auto x1 = g.strategies().index_of("x1");
  const auto x2 = g.strategies().index_of("x2");
  s.expect(before.greatest == std::vector<std::size_t>{x1}, "x1 is the alpha-greatest strategy");

  const auto spec = fixtures::example2_convolution();
  const auto f = apply_morphism(g, spec.map, spec.target);
  std::string table;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) table += f.target.outcome_set().label(f.target.at(x, y)) + ' ';
  s.note("convolved table (row-major): " + table);
  s.expect(table == "3 4 4 5 ", "p+q gives the table [[3,4],[4,5]]");
  const auto after = alpha(f.target);
  note_guaranteed(s, f.target, after);
  s.expect(after.greatest == std::vector<std::size_t>{x2}, "after p+q, x2 is alpha-greatest and x1 is not");
  return s.finish();
}

ScenarioResult dominated_equivalent() {
  Scenario s("example 3: alpha-equivalent strategies with strict Pareto domination");
  const auto g = fixtures::example3();
  const auto a = alpha(g);
  note_guaranteed(s, g, a);
  const auto x1 = g.strategies().index_of("x1");
  const auto x2 = g.strategies().index_of("x2");
  s.expect(a.guaranteed[x1] == a.guaranteed[x2], "V_x1 = V_x2");
  s.expect(strict_pareto(g).test(x1, x2), "x2 strictly Pareto-dominates x1");
  const auto verdict = is_suitable(g, a.preference);
  if (verdict.witness)
    s.note("suitability witness: (" + g.strategies().label(verdict.witness->first) + "," +
           g.strategies().label(verdict.witness->second) + ")");
  s.expect(!verdict.holds, "alpha preference is not suitable");
  return s.finish();
}

ScenarioResult added_outcomes() {
  Scenario s("example 4: alpha-greatest strategy lost by adding non-realized outcomes");
  const auto g = fixtures::example4();
  const auto a = alpha(g);
  note_guaranteed(s, g, a);
  const auto x1 = g.strategies().index_of("x1");
  const auto x2 = g.strategies().index_of("x2");
  s.expect(a.greatest == std::vector<std::size_t>{x1}, "x1 is the alpha-greatest strategy of G");

  const auto ext = fixtures::example4_extended();
  const auto b = alpha(ext);
  note_guaranteed(s, ext, b);
  const bool incomparable = !b.preference.prefers(x1, x2) && !b.preference.prefers(x2, x1);
  s.expect(incomparable, "x1 and x2 are alpha-incomparable in the extended game");
  s.note("alpha-greatest in the extended game: " + labels_of(b.greatest, ext.strategies()));
  return s.finish();
}

}  // namespace

std::vector<ScenarioResult> run_anomalies() {
  return {lattice_game(), convolution(), dominated_equivalent(), added_outcomes()};
}

}  // namespace ordpref
