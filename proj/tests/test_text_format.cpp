#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracle.hpp"
#include "ordpref/fixtures.hpp"
#include "ordpref/text_format.hpp"

using namespace ordpref;

namespace {

std::string data_file(const char* name) { return read_file(std::string(ORDPREF_DATA_DIR) + "/" + name); }

std::string parse_error(std::string_view text) {
  try {
    (void)parse_dmp(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

constexpr const char* kHeader =
    "outcomes: a b\n"
    "order: a<b\n"
    "strategies: x1 x2\n"
    "states: y1 y2\n";

}  // namespace

TEST_CASE("data files match the embedded fixtures") {
  CHECK(data_file("example1.dmp") == fixtures::example1_text());
  CHECK(data_file("example1_two_states.dmp") == fixtures::example1_two_states_text());
  CHECK(data_file("example2.dmp") == fixtures::example2_text());
  CHECK(data_file("example2_convolution.morph") == fixtures::example2_convolution_text());
  CHECK(data_file("example3.dmp") == fixtures::example3_text());
  CHECK(data_file("example4.dmp") == fixtures::example4_text());
  CHECK(data_file("example4_extended.dmp") == fixtures::example4_extended_text());
}

TEST_CASE("parsing a problem") {
  const auto g = parse_dmp(std::string(kHeader) + "row x1: a b\nrow x2: b b\n");
  CHECK(g.strategies().labels() == std::vector<std::string>{"x1", "x2"});
  CHECK(g.at(0, 1) == 1);
  CHECK(g.outcomes().less(0, 1));
  // Comments and blank lines anywhere.
  const auto h = parse_dmp(std::string("# top\n\n") + kHeader + "# mid\nrow x2: b b\nrow x1: a b\n");
  CHECK(h == g);
}

TEST_CASE("parse errors name the line") {
  CHECK(parse_error(std::string(kHeader) + "row x1: a c\nrow x2: b b\n").find("line 5") != std::string::npos);
  CHECK(parse_error(std::string(kHeader) + "row x1: a c\nrow x2: b b\n").find("'c'") != std::string::npos);
  CHECK(parse_error(std::string(kHeader) + "row x1: a\nrow x2: b b\n").find("line 5") != std::string::npos);
  CHECK(parse_error(std::string(kHeader) + "row x1: a b\n").find("missing row for strategy 'x2'") !=
        std::string::npos);
  CHECK(parse_error(std::string(kHeader) + "row x1: a b\nrow x1: a b\nrow x2: b b\n").find("duplicate row") !=
        std::string::npos);
  CHECK(parse_error(std::string(kHeader) + "states: y1\nrow x1: a b\nrow x2: b b\n").find("duplicate section") !=
        std::string::npos);
  CHECK(parse_error("outcomes: a b\norder: a<b\nstrategies: x1\nrow x1: a\n").find("missing section 'states:'") !=
        std::string::npos);
  CHECK(parse_error("outcomes: a b\norder: a-b\nstrategies: x1\nstates: y1\nrow x1: a\n").find("u<v") !=
        std::string::npos);
  CHECK(parse_error("colour: red\n").find("unknown section") != std::string::npos);
  CHECK(parse_error("just words\n").find("line 1") != std::string::npos);
}

TEST_CASE("the cycle fixture is rejected") {
  const auto msg = parse_error(data_file("cycle.dmp"));
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find('u') != std::string::npos);
  CHECK(msg.find('v') != std::string::npos);
}

TEST_CASE("render and parse round-trip") {
  for (const auto& g : {fixtures::example1(), fixtures::example1_two_states(), fixtures::example2(),
                        fixtures::example3(), fixtures::example4(), fixtures::example4_extended()})
    CHECK(parse_dmp(render_dmp(g)) == g);
  std::mt19937 rng(61);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_poset(rng, 1 + t % 5);
    const auto g = oracle::to_dmp(oracle::random_game(rng, p, 1 + t % 3, 1 + t % 4));
    REQUIRE(parse_dmp(render_dmp(g)) == g);
  }
}

TEST_CASE("relations") {
  const GroundSet y({"y1", "y2"});
  const auto r = parse_relation("# sigma\ny1 y2\ny2 y2\n", y);
  CHECK(r.pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}});
  CHECK(parse_relation("", y).empty());
  const auto many = parse_relations("y1 y1\n---\ny2 y1\ny1 y2\n---\n", y);
  REQUIRE(many.size() == 3);
  CHECK(many[1].count() == 2);
  CHECK(many[2].empty());
  CHECK_THROWS_AS(parse_relation("y1 y3\n", y), ParseError);
  CHECK_THROWS_AS(parse_relation("y1\n", y), ParseError);
  CHECK_THROWS_AS(parse_relation("y1 y1\n---\ny2 y2\n", y), ParseError);
}

TEST_CASE("morphisms") {
  const auto spec = fixtures::example2_convolution();
  CHECK(spec.target.ground().size() == 6);
  CHECK(spec.map.size() == fixtures::example2().outcome_set().size());
  const GroundSet src({"a", "b"});
  CHECK_THROWS_AS(parse_morphism("outcomes: u\norder:\nmap a -> u\n", src), ParseError);
  CHECK_THROWS_AS(parse_morphism("outcomes: u\norder:\nmap a -> u\nmap a -> u\nmap b -> u\n", src), ParseError);
  CHECK_THROWS_AS(parse_morphism("outcomes: u\nmap a -> u\nmap b -> u\n", src), ParseError);
  CHECK_THROWS_AS(parse_morphism("outcomes: u\norder:\nmap a => u\nmap b -> u\n", src), ParseError);
  const auto ok = parse_morphism("outcomes: u v\norder: u<v\nmap a -> u\nmap b -> v\n", src);
  CHECK(ok.map == std::vector<std::size_t>{0, 1});
}

TEST_CASE("monoid specs") {
  const GroundSet y({"y1", "y2", "y3"});
  CHECK(resolve_monoid(parse_monoid_spec("pareto"), y) == reflexive_monoid(y));
  CHECK(resolve_monoid(parse_monoid_spec("beta"), y) == surjective_monoid(y));
  CHECK(resolve_monoid(parse_monoid_spec("total"), y) == total_monoid(y));
  CHECK(resolve_monoid(parse_monoid_spec("dictator=y2"), y) == dictator_monoid(y, 1));
  CHECK(resolve_monoid(parse_monoid_spec("filter=y1,y3"), y) == filter_monoid(y, IndexSet(0b101)));
  CHECK(resolve_monoid(parse_monoid_spec("atom=y3"), y) == atom_monoid(y, 2));
  CHECK_THROWS_AS(parse_monoid_spec("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_monoid_spec("generators="), ParseError);
  CHECK_THROWS_AS(resolve_monoid(parse_monoid_spec("dictator"), y), ParseError);
  CHECK_THROWS_AS(resolve_monoid(parse_monoid_spec("dictator=y1,y2"), y), ParseError);
  CHECK_THROWS_AS(resolve_monoid(parse_monoid_spec("dictator=y9"), y), ParseError);
  CHECK_THROWS_AS(resolve_monoid(parse_monoid_spec("beta=y1"), y), ParseError);
  CHECK_THROWS_AS(resolve_monoid(parse_monoid_spec("filter"), y), ParseError);

  const std::string path = "ordpref_test_generators.rel";
  {
    std::ofstream out(path);
    out << "y1 y2\ny2 y3\ny3 y1\n";
  }
  const auto spec = parse_monoid_spec(path);
  CHECK(spec.name == "generators");
  const BinaryRelation cycle = parse_relation(read_file(path), y);
  CHECK(resolve_monoid(spec, y) == closure(y, std::vector<BinaryRelation>{cycle}));
  CHECK(resolve_monoid(parse_monoid_spec("generators=" + path), y) == resolve_monoid(spec, y));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file(path), Error);
}

TEST_CASE("rendered preferences") {
  const auto text = render_preference(derive(fixtures::example3(), surjective_monoid(fixtures::example3().states())));
  CHECK(text.find("x2") != std::string::npos);
  CHECK(text == render_preference(derive(fixtures::example3(), surjective_monoid(fixtures::example3().states()))));
}
