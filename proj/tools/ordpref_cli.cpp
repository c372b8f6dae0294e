// ordpref: derive strategy preferences from closed submonoids of relations.
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ordpref/anomalies.hpp"
#include "ordpref/lattice.hpp"
#include "ordpref/text_format.hpp"

using namespace ordpref;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::string strategy_list(const std::vector<std::size_t>& xs, const GroundSet& ground) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : " ") + ground.label(x);
  return out;
}

std::string pair_label(const StrategyPair& p, const GroundSet& ground) {
  return "(" + ground.label(p.first) + "," + ground.label(p.second) + ")";
}

void print_verdict(const std::string& name, bool holds, const std::string& detail = {}) {
  std::cout << std::left << std::setw(28) << name << (holds ? "yes" : "no");
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << '\n';
}

std::string quotient_text(const Preference& pref) {
  const auto& x = pref.ground();
  const auto classes = pref.equivalence_classes();
  std::ostringstream out;
  out << "classes:";
  for (const auto& c : classes) out << ' ' << to_string(c, x);
  out << '\n';
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j) continue;
      const auto a = classes[i].indices().front();
      const auto b = classes[j].indices().front();
      if (pref.prefers(a, b)) out << "  " << to_string(classes[j], x) << " ⪰ " << to_string(classes[i], x) << '\n';
    }
  return out.str();
}

int cmd_derive(const std::string& dmp_path, const std::string& spec, bool quotient) {
  const auto g = parse_dmp(read_file(dmp_path));
  const auto monoid = resolve_monoid(parse_monoid_spec(spec), g.states());
  const auto pref = derive(g, monoid);
  std::cout << "monoid: " << spec << '\n';
  std::cout << render_preference(pref);
  if (quotient) std::cout << quotient_text(pref);
  std::cout << "maximal: " << strategy_list(pref.maximal(), g.strategies()) << '\n';
  const auto suitable = is_suitable(g, pref);
  print_verdict("suitable (A5)", suitable.holds,
                suitable.witness ? "witness " + pair_label(*suitable.witness, g.strategies()) : "");
  return kOk;
}

int cmd_anomalies() {
  std::size_t passed = 0;
  const auto results = run_anomalies();
  for (const auto& r : results) {
    std::cout << (r.passed ? "[pass] " : "[FAIL] ") << r.name << '\n';
    for (const auto& line : r.lines) std::cout << "  " << line << '\n';
    passed += r.passed ? 1 : 0;
  }
  std::cout << passed << '/' << results.size() << " scenarios pass\n";
  return passed == results.size() ? kOk : kFailed;
}

std::string element_name(const MonoidLattice& lattice, std::size_t i,
                         const std::vector<std::pair<std::string, ClosedMonoid>>& named) {
  if (auto n = canonical_name(lattice.elements[i], named)) return *n;
  return "m" + std::to_string(i);
}

void print_named(const char* title, const std::vector<std::size_t>& ids, const MonoidLattice& lattice,
                 const std::vector<std::pair<std::string, ClosedMonoid>>& named) {
  std::cout << title << ':';
  for (auto i : ids) std::cout << ' ' << element_name(lattice, i, named);
  std::cout << '\n';
}

void print_census(const Dmp& g, const MonoidLattice& lattice) {
  const auto census = preference_census(g, lattice);
  std::cout << "\ncensus: " << census.entries.size() << " distinct preferences over " << lattice.elements.size()
            << " monoids\n";
  std::cout << std::left << std::setw(8) << "pref" << std::setw(40) << "pairs" << "monoids\n";
  for (std::size_t p = 0; p < census.entries.size(); ++p) {
    std::string ids;
    for (auto m : census.entries[p].monoids) ids += (ids.empty() ? "m" : " m") + std::to_string(m);
    std::cout << std::left << std::setw(8) << ("p" + std::to_string(p)) << std::setw(40)
              << census.entries[p].preference.rel().to_string() << ids << '\n';
  }
  std::cout << "monotone: " << (census_is_monotone(lattice, census) ? "yes" : "no") << '\n';
  std::cout << "\nrecords:\n";
  for (std::size_t p = 0; p < census.entries.size(); ++p) {
    std::cout << 'p' << p << '\t';
    const auto& ms = census.entries[p].monoids;
    for (std::size_t k = 0; k < ms.size(); ++k) std::cout << (k ? "," : "") << 'm' << ms[k];
    std::cout << '\n';
  }
}

int cmd_lattice(std::size_t states, const std::string& dmp_path, const std::string& dot_path, bool generated,
                std::size_t max_gens) {
  std::optional<Dmp> g;
  GroundSet ground = GroundSet::indexed("y", states);
  if (!dmp_path.empty()) {
    g = parse_dmp(read_file(dmp_path));
    ground = g->states();
  }
  const auto lattice = [&] {
    if (generated) {
      if (ground.size() > 3) throw UnsupportedSize("generated mode pools all relations and supports |Y| <= 3");
      GeneratedOptions opts;
      opts.max_generators = max_gens;
      try {
        return build_lattice(ground, enumerate_generated(ground, all_relations(ground), opts));
      } catch (const ResourceLimit& e) {
        throw ResourceLimit(std::string(e.what()) + "; lower --max-gens");
      }
    }
    if (ground.size() != 2)
      throw UnsupportedSize("exhaustive enumeration supports |Y| = 2 only; use --generated --max-gens K for |Y| = " +
                            std::to_string(ground.size()));
    return enumerate_exhaustive(ground);
  }();
  const auto named = named_monoids(ground);
  std::cout << "states: " << strategy_list([&] {
    std::vector<std::size_t> v(ground.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }(), ground) << '\n';
  std::cout << "mode: " << (generated ? "generated, at most " + std::to_string(max_gens) + " generators" : "exhaustive")
            << '\n';
  std::cout << "closed submonoids: " << lattice.elements.size() << '\n';
  std::cout << "hasse edges: " << lattice.hasse_edges.size() << '\n';
  if (lattice.least) std::cout << "least: " << element_name(lattice, *lattice.least, named) << '\n';
  if (lattice.greatest) std::cout << "greatest: " << element_name(lattice, *lattice.greatest, named) << '\n';
  print_named("atoms", lattice.atoms, lattice, named);
  print_named("dual atoms", lattice.dual_atoms, lattice, named);
  std::cout << "elements:\n";
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    const auto name = canonical_name(lattice.elements[i], named);
    std::cout << "  m" << std::left << std::setw(5) << i << std::setw(14) << name.value_or("-")
              << signature(lattice.elements[i]) << '\n';
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) throw Error("cannot write " + dot_path);
    out << export_dot(lattice);
    std::cout << "dot: " << dot_path << '\n';
  }
  if (g) print_census(*g, lattice);
  return kOk;
}

int cmd_check(const std::string& dmp_path, const std::string& spec, const std::string& morphism_path) {
  const auto g = parse_dmp(read_file(dmp_path));
  const auto monoid = resolve_monoid(parse_monoid_spec(spec), g.states());
  const auto rel = derive_relation(g, monoid);
  const auto& x = g.strategies();
  bool all = true;

  const bool preorder = is_reflexive(rel) && is_transitive(rel);
  print_verdict("preorder (A1)", preorder);
  all = all && preorder;

  const auto par = pareto(g).rel();
  std::string missing;
  for (auto p : par.pairs())
    if (!rel.test(p.first, p.second)) {
      missing = "missing " + pair_label(p, x);
      break;
    }
  print_verdict("contains pareto (A2)", missing.empty(), missing);
  all = all && missing.empty();

  if (!morphism_path.empty()) {
    const auto spec_m = parse_morphism(read_file(morphism_path), g.outcome_set());
    const auto f = apply_morphism(g, spec_m.map, spec_m.target);
    const auto v = check_functoriality(f, monoid);
    print_verdict("morphism inclusion (A3)", v.holds, v.witness ? "lost " + pair_label(*v.witness, x) : "");
    all = all && v.holds;
  }

  if (preorder) {
    const auto v = is_suitable(g, Preference(rel));
    print_verdict("suitable (A5)", v.holds, v.witness ? "witness " + pair_label(*v.witness, x) : "");
    all = all && v.holds;
  } else {
    print_verdict("suitable (A5)", false, "not a preorder");
    all = false;
  }
  return all ? kOk : kFailed;
}

int cmd_validate(const std::string& dmp_path) {
  const auto g = parse_dmp(read_file(dmp_path));
  std::cout << "ok: " << g.strategies().size() << " strategies, " << g.states().size() << " states, "
            << g.outcome_set().size() << " outcomes\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategy preferences derived from closed monoids of binary relations"};
  app.require_subcommand(1);

  std::string dmp_path, monoid_spec, dot_path, morphism_path;
  bool quotient = false, generated = false;
  std::size_t states = 2, max_gens = 1;

  auto* derive_cmd = app.add_subcommand("derive", "Derive a strategy preference from a monoid");
  derive_cmd->add_option("--dmp", dmp_path, "Problem file")->required();
  derive_cmd
      ->add_option("--monoid", monoid_spec,
                   "pareto | universal | beta | dual-beta | beta-both | dictator=Y | filter=Y1,Y2 | atom=Y | "
                   "idempotent=PATH | generators=PATH | PATH")
      ->required();
  derive_cmd->add_flag("--quotient", quotient, "Also print the order on equivalence classes");

  auto* anomalies_cmd = app.add_subcommand("anomalies", "Replay the built-in alpha-domination anomalies");

  auto* lattice_cmd = app.add_subcommand("lattice", "Enumerate closed submonoids");
  lattice_cmd->add_option("--states", states, "Number of states when no problem is given")->check(CLI::Range(1, 4));
  lattice_cmd->add_option("--dmp", dmp_path, "Append the preference census for this problem");
  lattice_cmd->add_option("--dot", dot_path, "Write the Hasse diagram as DOT");
  lattice_cmd->add_flag("--generated", generated, "Enumerate closures of small generator sets");
  lattice_cmd->add_option("--max-gens", max_gens, "Generators per closure in generated mode")
      ->check(CLI::Range(1, 3));

  auto* check_cmd = app.add_subcommand("check", "Check the preference axioms for one monoid");
  check_cmd->add_option("--dmp", dmp_path, "Problem file")->required();
  check_cmd->add_option("--monoid", monoid_spec, "Monoid spec, as for derive")->required();
  check_cmd->add_option("--morphism", morphism_path, "Outcome morphism file");

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a problem file");
  validate_cmd->add_option("--dmp", dmp_path, "Problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*derive_cmd) return cmd_derive(dmp_path, monoid_spec, quotient);
    if (*anomalies_cmd) return cmd_anomalies();
    if (*lattice_cmd) return cmd_lattice(states, dmp_path, dot_path, generated, max_gens);
    if (*check_cmd) return cmd_check(dmp_path, monoid_spec, morphism_path);
    if (*validate_cmd) return cmd_validate(dmp_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
