#include <doctest.h>

#include <sstream>

#include "bergepath/canonical.hpp"
#include "bergepath/constructions.hpp"
#include "bergepath/io.hpp"
#include "support.hpp"

using namespace bergepath;
using testing::make;

namespace {

Hypergraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("text format") {
  CHECK(parse("7 3\n0 1 2\n0 3 4\n0 5 6") == make(7, 3, testing::kStar73));
  CHECK(parse("# star\n\n7 3\n0 5 6\n  0 1 2\n# comment\n0 3 4\n") == make(7, 3, testing::kStar73));

  const auto twice = parse("3 3\n0 1 2\n0 1 2\n");
  CHECK(twice.size() == 2);
  CHECK(twice.max_multiplicity() == 2);

  CHECK(parse("4 3\n").size() == 0);
}

TEST_CASE("text errors carry line numbers") {
  CHECK(error_line("7 3\n0 1") == 2);
  CHECK(error_line("7 3\n0 1 2\n\n0 1 7\n") == 4);
  CHECK(error_line("7 3\n0 1 1\n") == 2);
  CHECK(error_line("7 3\n0 x 2\n") == 2);
  CHECK(error_line("7 3\n0 99999999999999999999 2\n") == 2);
  CHECK(error_line("# only a comment\n") == 1);
  CHECK(error_line("7\n") == 1);
  CHECK(error_line("7 1\n") == 1);
  CHECK(error_line("70 3\n") == 1);

  try {
    parse("7 3\n0 1");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("wrong edge size") != std::string::npos);
  }
}

TEST_CASE("JSON format") {
  const auto star = make(7, 3, testing::kStar73);
  CHECK(to_json(star).dump() == R"({"edges":[[0,1,2],[0,3,4],[0,5,6]],"n":7,"r":3})");
  CHECK(parse(to_json(star).dump()) == star);
  CHECK(parse_hypergraph_json(to_json(star)) == star);
  CHECK_THROWS_AS(parse("{\"n\": 7}"), ParseError);
  CHECK_THROWS_AS(parse("{\"n\": 7, "), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 4, "r": 3, "edges": [[0, 1]]})"), ParameterError);
}

TEST_CASE("construct, serialize, parse keeps the canonical form") {
  for (const auto& name : family_names())
    for (int n = 5; n <= 12; ++n) {
      NamedConstruction c;
      try {
        c = construct_by_name(name, n, 4, 5);
      } catch (const ParameterError&) {
        continue;
      }
      const auto text = canonical_form(c.hypergraph).text;
      CHECK(canonical_form(parse(to_text(c.hypergraph))).text == text);
      CHECK(canonical_form(parse(to_json(c.hypergraph).dump())).text == text);
    }
}

TEST_CASE("report serialization") {
  SearchOutcome s;
  s.status = SearchStatus::value;
  s.value = 3;
  s.witnesses = {"7:3:0.1.2/0.3.4/0.5.6"};
  s.nodes_explored = 42;
  s.elapsed_ms = 12.5;
  const auto plain = to_json(s);
  CHECK_FALSE(plain.contains("elapsed_ms"));
  CHECK(plain.dump() ==
        R"({"nodes_explored":42,"status":"value","value":3,"witnesses":["7:3:0.1.2/0.3.4/0.5.6"]})");
  CHECK(to_json(s, true).at("elapsed_ms") == 12.5);

  SearchOutcome none;
  CHECK(to_json(none).at("value").is_null());
  CHECK(to_json(none).at("status") == "infeasible");

  FormulaResult f;
  f.regime = Regime::undefined;
  f.source = "k=3 star";
  CHECK(to_json(f).at("value") == "undefined");

  const auto w = to_json(BergeWitness{WitnessKind::cycle, {0, 1}, {0, 1}});
  CHECK(w.at("kind") == "cycle");
  CHECK(w.at("edge_instances") == nlohmann::json::array({0, 1}));

  SparseSetReport rep;
  rep.verdict = SparseVerdict::precondition_violated;
  rep.violated = "BC_t-free";
  CHECK(to_json(rep).at("violated") == "BC_t-free");
  CHECK_FALSE(to_json(rep).contains("S"));
}
