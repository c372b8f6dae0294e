#pragma once

// Line-oriented text formats for problems, relations, morphisms and monoid specs.
//
// Problem file:
//   # comment
//   outcomes: 0 a b c 1
//   order: 0<a 0<b 0<c a<1 b<1 c<1
//   strategies: x1 x2
//   states: y1 y2 y3
//   row x1: b c 0
//   row x2: 0 a 1
//
// Relation file: one "yi yj" pair per line. A generator file may hold several
// relations separated by "---" lines.
//
// Morphism file: target "outcomes:" and "order:" sections plus one
// "map a -> b" line per source outcome.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordpref/dmp.hpp"
#include "ordpref/monoid.hpp"

namespace ordpref {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Dmp parse_dmp(std::string_view text);
/// Canonical text form; the order is written as its covering pairs.
std::string render_dmp(const Dmp& g);

BinaryRelation parse_relation(std::string_view text, const GroundSet& states);
std::vector<BinaryRelation> parse_relations(std::string_view text, const GroundSet& states);

struct MorphismSpec {
  PartialOrder target;
  std::vector<std::size_t> map;
};
MorphismSpec parse_morphism(std::string_view text, const GroundSet& source_outcomes);

/// A canonical name with parameters ("dictator=y1", "filter=y1,y2") or a
/// generator file ("generators=PATH", "idempotent=PATH", or a bare path).
struct MonoidSpec {
  std::string name;
  std::vector<std::string> params;
  std::optional<std::string> path;
};
MonoidSpec parse_monoid_spec(std::string_view spec);
ClosedMonoid resolve_monoid(const MonoidSpec& spec, const GroundSet& states);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

/// Matrix in strategy order, pair list and readable "x2 ⪰ x1" lines.
std::string render_preference(const Preference& pref);

}  // namespace ordpref
