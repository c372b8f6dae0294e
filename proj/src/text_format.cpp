#include "ordpref/text_format.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace ordpref {

namespace {

struct Line {
  std::size_t number;
  std::string header;               // text before ':' (trimmed), empty when there is no ':'
  std::vector<std::string> tokens;  // tokens after ':' or of the whole line
};

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Strips comments and blank lines.
std::vector<Line> lex(std::string_view text, bool split_header) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    Line line{number, {}, {}};
    const auto colon = split_header ? raw.find(':') : std::string_view::npos;
    if (colon != std::string_view::npos) {
      line.header = trim(raw.substr(0, colon));
      line.tokens = split_ws(raw.substr(colon + 1));
    } else {
      line.tokens = split_ws(raw);
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t lookup(const GroundSet& ground, const std::string& label, std::size_t line, std::string_view what) {
  if (auto i = ground.find(label)) return *i;
  throw ParseError(line, "unknown " + std::string(what) + " '" + label + "'");
}

GroundSet make_ground(const Line& line, std::string_view what) {
  if (line.tokens.empty()) throw ParseError(line.number, std::string(what) + " list is empty");
  try {
    return GroundSet(line.tokens);
  } catch (const StructuralError& e) {
    throw ParseError(line.number, std::string(what) + ": " + e.what());
  }
}

PartialOrder make_order(const GroundSet& outcomes, const Line& line) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& item : line.tokens) {
    const auto lt = item.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == item.size() || item.find('<', lt + 1) != std::string::npos)
      throw ParseError(line.number, "order item '" + item + "' is not of the form u<v");
    pairs.emplace_back(lookup(outcomes, item.substr(0, lt), line.number, "outcome"),
                       lookup(outcomes, item.substr(lt + 1), line.number, "outcome"));
  }
  try {
    return PartialOrder::from_comparabilities(outcomes, pairs);
  } catch (const ValidationError& e) {
    throw ParseError(line.number, e.what());
  }
}

// Keeps the first occurrence of each named section, rejecting duplicates.
const Line* take_section(const std::map<std::string, const Line*>& sections, const std::string& name) {
  auto it = sections.find(name);
  return it == sections.end() ? nullptr : it->second;
}

}  // namespace

Dmp parse_dmp(std::string_view text) {
  const auto lines = lex(text, true);
  std::map<std::string, const Line*> sections;
  std::vector<const Line*> rows;
  for (const auto& line : lines) {
    if (line.header.empty()) throw ParseError(line.number, "expected a 'section:' line");
    const auto head = split_ws(line.header);
    if (head.size() == 2 && head[0] == "row") {
      rows.push_back(&line);
      continue;
    }
    if (head.size() != 1 || (head[0] != "outcomes" && head[0] != "order" && head[0] != "strategies" &&
                             head[0] != "states"))
      throw ParseError(line.number, "unknown section '" + line.header + "'");
    if (!sections.emplace(head[0], &line).second)
      throw ParseError(line.number, "duplicate section '" + head[0] + "'");
  }
  for (const char* name : {"outcomes", "order", "strategies", "states"})
    if (!take_section(sections, name)) throw ParseError(0, std::string("missing section '") + name + ":'");

  const auto outcomes = make_ground(*sections["outcomes"], "outcomes");
  const auto order = make_order(outcomes, *sections["order"]);
  const auto strategies = make_ground(*sections["strategies"], "strategies");
  const auto states = make_ground(*sections["states"], "states");

  std::vector<std::size_t> table(strategies.size() * states.size());
  std::vector<bool> seen(strategies.size(), false);
  for (const auto* row : rows) {
    const auto name = split_ws(row->header)[1];
    const auto x = lookup(strategies, name, row->number, "strategy");
    if (seen[x]) throw ParseError(row->number, "duplicate row for strategy '" + name + "'");
    seen[x] = true;
    if (row->tokens.size() != states.size())
      throw ParseError(row->number, "row '" + name + "' has " + std::to_string(row->tokens.size()) +
                                        " entries, expected " + std::to_string(states.size()));
    for (std::size_t y = 0; y < states.size(); ++y)
      table[x * states.size() + y] = lookup(outcomes, row->tokens[y], row->number, "outcome");
  }
  for (std::size_t x = 0; x < strategies.size(); ++x)
    if (!seen[x])
      throw ParseError(sections["strategies"]->number, "missing row for strategy '" + strategies.label(x) + "'");
  return Dmp(strategies, states, order, std::move(table));
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += ' ' + s;
  return out;
}

}  // namespace

std::string render_dmp(const Dmp& g) {
  const auto& w = g.outcomes();
  const auto strict = strict_part(w);
  const auto implied = compose(strict, strict);
  std::ostringstream out;
  out << "outcomes:" << join(g.outcome_set().labels()) << '\n';
  out << "order:";
  for (auto [a, b] : strict.pairs())
    if (!implied.test(a, b)) out << ' ' << g.outcome_set().label(a) << '<' << g.outcome_set().label(b);
  out << '\n';
  out << "strategies:" << join(g.strategies().labels()) << '\n';
  out << "states:" << join(g.states().labels()) << '\n';
  for (std::size_t x = 0; x < g.strategies().size(); ++x) {
    out << "row " << g.strategies().label(x) << ':';
    for (std::size_t y = 0; y < g.states().size(); ++y) out << ' ' << g.outcome_set().label(g.at(x, y));
    out << '\n';
  }
  return out.str();
}

std::vector<BinaryRelation> parse_relations(std::string_view text, const GroundSet& states) {
  std::vector<BinaryRelation> out;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& line : lex(text, false)) {
    if (line.tokens.size() == 1 && line.tokens[0] == "---") {
      out.push_back(BinaryRelation::from_pairs(states, pairs));
      pairs.clear();
      continue;
    }
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected a pair 'yi yj'");
    pairs.emplace_back(lookup(states, line.tokens[0], line.number, "state"),
                       lookup(states, line.tokens[1], line.number, "state"));
  }
  out.push_back(BinaryRelation::from_pairs(states, pairs));
  return out;
}

BinaryRelation parse_relation(std::string_view text, const GroundSet& states) {
  auto all = parse_relations(text, states);
  if (all.size() != 1) throw ParseError(0, "expected a single relation, found " + std::to_string(all.size()));
  return all.front();
}

MorphismSpec parse_morphism(std::string_view text, const GroundSet& source_outcomes) {
  const Line* outcomes_line = nullptr;
  const Line* order_line = nullptr;
  std::vector<const Line*> maps;
  const auto lines = lex(text, true);
  for (const auto& line : lines) {
    if (line.header == "outcomes" || line.header == "order") {
      auto& slot = line.header == "outcomes" ? outcomes_line : order_line;
      if (slot) throw ParseError(line.number, "duplicate section '" + line.header + "'");
      slot = &line;
    } else if (line.header.empty() && !line.tokens.empty() && line.tokens[0] == "map") {
      maps.push_back(&line);
    } else {
      throw ParseError(line.number, "expected 'outcomes:', 'order:' or 'map a -> b'");
    }
  }
  if (!outcomes_line) throw ParseError(0, "missing section 'outcomes:'");
  if (!order_line) throw ParseError(0, "missing section 'order:'");
  const auto target = make_ground(*outcomes_line, "outcomes");
  auto order = make_order(target, *order_line);

  std::vector<std::size_t> map(source_outcomes.size(), target.size());
  for (const auto* line : maps) {
    if (line->tokens.size() != 4 || line->tokens[2] != "->")
      throw ParseError(line->number, "expected 'map a -> b'");
    const auto a = lookup(source_outcomes, line->tokens[1], line->number, "source outcome");
    const auto b = lookup(target, line->tokens[3], line->number, "target outcome");
    if (map[a] != target.size()) throw ParseError(line->number, "outcome '" + line->tokens[1] + "' mapped twice");
    map[a] = b;
  }
  for (std::size_t a = 0; a < map.size(); ++a)
    if (map[a] == target.size()) throw ParseError(0, "outcome '" + source_outcomes.label(a) + "' is not mapped");
  return {std::move(order), std::move(map)};
}

MonoidSpec parse_monoid_spec(std::string_view text) {
  MonoidSpec spec;
  const std::string s(text);
  const auto eq = s.find('=');
  spec.name = s.substr(0, eq);
  const std::string rest = eq == std::string::npos ? "" : s.substr(eq + 1);
  if (spec.name == "generators" || spec.name == "idempotent") {
    if (rest.empty()) throw ParseError(0, "monoid '" + spec.name + "' needs a file path");
    spec.path = rest;
    return spec;
  }
  static const char* const kPlain[] = {"pareto", "reflexive", "universal", "beta",     "surjective",
                                       "dual-beta", "total",    "beta-both", "dictator", "filter", "atom"};
  const bool known = std::find(std::begin(kPlain), std::end(kPlain), spec.name) != std::end(kPlain);
  if (!known) {
    if (eq == std::string::npos && std::filesystem::exists(s)) return MonoidSpec{"generators", {}, s};
    throw ParseError(0, "unknown monoid '" + s + "'");
  }
  std::size_t pos = 0;
  while (eq != std::string::npos && pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    if (comma > pos) spec.params.push_back(rest.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ClosedMonoid resolve_monoid(const MonoidSpec& spec, const GroundSet& states) {
  auto state_set = [&]() {
    IndexSet set;
    for (const auto& p : spec.params) {
      auto i = states.find(p);
      if (!i) throw ParseError(0, "monoid parameter '" + p + "' is not a declared state");
      set.insert(*i);
    }
    return set;
  };
  auto one_state = [&]() {
    if (spec.params.size() != 1) throw ParseError(0, "monoid '" + spec.name + "' takes exactly one state");
    return state_set().indices().front();
  };
  if (spec.name == "generators") return closure(states, parse_relations(read_file(*spec.path), states));
  if (spec.name == "idempotent") return idempotent_monoid(parse_relation(read_file(*spec.path), states));
  if (spec.name != "dictator" && spec.name != "filter" && spec.name != "atom" && !spec.params.empty())
    throw ParseError(0, "monoid '" + spec.name + "' takes no parameters");
  if (spec.name == "pareto" || spec.name == "reflexive") return reflexive_monoid(states);
  if (spec.name == "universal") return universal_monoid(states);
  if (spec.name == "beta" || spec.name == "surjective") return surjective_monoid(states);
  if (spec.name == "dual-beta" || spec.name == "total") return total_monoid(states);
  if (spec.name == "beta-both") return beta_both_monoid(states);
  if (spec.name == "dictator") return dictator_monoid(states, one_state());
  if (spec.name == "atom") return atom_monoid(states, one_state());
  if (spec.name == "filter") {
    if (spec.params.empty()) throw ParseError(0, "filter needs at least one state");
    return filter_monoid(states, state_set());
  }
  throw ParseError(0, "unknown monoid '" + spec.name + "'");
}

std::string render_preference(const Preference& pref) {
  const auto& x = pref.ground();
  std::size_t width = 1;
  for (const auto& l : x.labels()) width = std::max(width, l.size());
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  std::ostringstream out;
  out << pad("") << " |";
  for (const auto& l : x.labels()) out << ' ' << pad(l);
  out << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << pad(x.label(i)) << " |";
    for (std::size_t j = 0; j < x.size(); ++j) out << ' ' << pad(pref.prefers(i, j) ? "1" : ".");
    out << '\n';
  }
  out << "pairs: " << pref.rel().to_string() << '\n';
  for (auto [a, b] : pref.rel().pairs())
    if (a != b) out << "  " << x.label(b) << " ⪰ " << x.label(a) << '\n';
  return out.str();
}

}  // namespace ordpref
