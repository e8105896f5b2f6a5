#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "herd/json_io.hpp"
#include "herd/walks.hpp"

using namespace herd;
using namespace herd::testing;

TEST_CASE("rational parsing accepts p, -p and p/q forms") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("+2/6") == Rational(1, 3));  // reduced
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("rational parsing rejects garbage and zero denominators") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("node id round trip") {
  CHECK(to_string(NodeId::state(0)) == "x1");
  CHECK(to_string(NodeId::input(1)) == "u2");
  CHECK(parse_node_id("x12") == NodeId::state(11));
  CHECK(parse_node_id("u1") == NodeId::input(0));
  CHECK_THROWS_AS(parse_node_id("x0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_node_id("y1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_node_id("x"), std::invalid_argument);
}

TEST_CASE("system_to_graph emits one edge per nonzero entry") {
  const LinearSystem sys = example_system();
  const SignedDigraph g = system_to_graph(sys);
  CHECK(g.n_states == 3);
  CHECK(g.n_inputs == 2);
  CHECK(g.edges.size() == 8);
  CHECK(g.edges.size() == static_cast<size_t>(nnz(sys.A) + nnz(sys.B)));

  auto find_edge = [&](NodeId from, NodeId to) -> const Edge& {
    for (const Edge& e : g.edges)
      if (e.from == from && e.to == to) return e;
    FAIL("missing edge");
    return g.edges.front();
  };
  const Edge& loop = find_edge(NodeId::state(0), NodeId::state(0));
  CHECK(loop.sign == -1);
  CHECK(*loop.weight == Rational(-1));
  const Edge& drive = find_edge(NodeId::input(0), NodeId::state(1));
  CHECK(*drive.weight == Rational(2));
  const Edge& cross = find_edge(NodeId::state(1), NodeId::state(2));
  CHECK(*cross.weight == Rational(-3));
}

TEST_CASE("system_to_graph on a zero A keeps only input edges") {
  const LinearSystem sys{mat({{0, 0}, {0, 0}}), mat({{1}, {1}})};
  const SignedDigraph g = system_to_graph(sys);
  REQUIRE(g.edges.size() == 2);
  for (const Edge& e : g.edges) {
    CHECK(!e.from.is_state());
    CHECK(e.sign == 1);
  }
}

TEST_CASE("cancellation example graph matches its sign labels") {
  const SignedDigraph g = cancellation_graph();
  CHECK(g.edges.size() == 5);
  int negatives = 0;
  for (const Edge& e : g.edges) negatives += e.sign < 0;
  CHECK(negatives == 1);  // only x1 -> x2
}

TEST_CASE("graph_to_sign_pattern reads signs off the graph") {
  const LinearSystem sys = graph_to_sign_pattern(example_sign_graph());
  CHECK(sys.A(2, 1) == Rational(-1));  // x2 -> x3 negative
  CHECK(sys.A(1, 2) == Rational(1));
  CHECK(sys.A(0, 0) == Rational(-1));
  CHECK(sys.B(0, 1) == Rational(-1));
  CHECK(sys.A(1, 1) == Rational(0));
}

TEST_CASE("graph_to_sign_pattern of an empty graph is all zeros") {
  SignedDigraph g;
  g.n_states = 2;
  g.n_inputs = 1;
  const LinearSystem sys = graph_to_sign_pattern(g);
  CHECK(nnz(sys.A) == 0);
  CHECK(nnz(sys.B) == 0);
}

TEST_CASE("weighted graph round trip reproduces the system exactly") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    const LinearSystem sys = random_system(rng, dim(rng), dim(rng));
    const LinearSystem back = graph_to_sign_pattern(system_to_graph(sys));
    CHECK(back.A == sys.A);
    CHECK(back.B == sys.B);
  }
}

TEST_CASE("sign-pattern round trip preserves entrywise signs") {
  const LinearSystem sys = example_system();
  SignedDigraph g = system_to_graph(sys);
  for (Edge& e : g.edges) e.weight.reset();  // keep the sign class only
  const LinearSystem pattern = graph_to_sign_pattern(g);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j)
      CHECK(sgn(pattern.A(i, j)) == sgn(sys.A(i, j)));
    for (Eigen::Index j = 0; j < 2; ++j)
      CHECK(sgn(pattern.B(i, j)) == sgn(sys.B(i, j)));
  }
}

TEST_CASE("graph validation rejects structural violations") {
  SignedDigraph g;
  g.n_states = 2;
  g.n_inputs = 1;

  SUBCASE("edge into an input") {
    g.edges = {{NodeId::state(0), NodeId::input(0), 1, {}}};
    CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  }
  SUBCASE("duplicate edge") {
    g.edges = {{NodeId::state(0), NodeId::state(1), 1, {}},
               {NodeId::state(0), NodeId::state(1), -1, {}}};
    CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  }
  SUBCASE("weight sign mismatch") {
    g.edges = {{NodeId::state(0), NodeId::state(1), 1, Rational(-2)}};
    CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  }
  SUBCASE("bad sign value") {
    g.edges = {{NodeId::state(0), NodeId::state(1), 2, {}}};
    CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  }
  SUBCASE("out of range target") {
    g.edges = {{NodeId::state(0), NodeId::state(5), 1, {}}};
    CHECK_THROWS_AS(validate_graph(g), std::invalid_argument);
  }
}

TEST_CASE("walk sign and weight are multiplicative under concatenation") {
  const SignedDigraph g = system_to_graph(example_system());
  // u2 -> x1 (length 1) concatenated with x1 -> ... -> x? (length 2)
  const auto firsts = enumerate_walks(g, NodeId::input(1), NodeId::state(0), 1);
  REQUIRE(firsts.size() == 1);
  for (int target = 0; target < 3; ++target) {
    const auto tails =
        enumerate_walks(g, NodeId::state(0), NodeId::state(target), 2);
    const auto fulls =
        enumerate_walks(g, NodeId::input(1), NodeId::state(target), 3);
    for (const Walk& tail : tails) {
      // The concatenation must appear among the full walks with multiplied
      // sign and weight.
      bool found = false;
      for (const Walk& full : fulls) {
        if (full.nodes.size() != 4 || full.nodes[1] != NodeId::state(0))
          continue;
        if (std::equal(tail.nodes.begin(), tail.nodes.end(),
                       full.nodes.begin() + 1)) {
          CHECK(full.sign == firsts[0].sign * tail.sign);
          CHECK(*full.weight == *firsts[0].weight * *tail.weight);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("system JSON accepts strings and integral numbers") {
  const auto input = parse_input_text(
      R"({"A": [["-1","0","0"],["5","0","2"],["4","-3","0"]],
          "B": [["0","-2"],["2","0"],["0","3"]]})");
  REQUIRE(input.system.has_value());
  CHECK(input.system->A == example_system().A);
  CHECK(input.system->B == example_system().B);

  const auto numeric = parse_input_text(R"({"A": [[0]], "B": [[2]]})");
  CHECK(numeric.system->B(0, 0) == Rational(2));
  const auto fractional = parse_input_text(R"({"A": [["1/2"]], "B": [[1]]})");
  CHECK(fractional.system->A(0, 0) == Rational(1, 2));
}

TEST_CASE("non-integral floats are rejected in exact mode, snapped in float mode") {
  CHECK_THROWS_AS(parse_input_text(R"({"A": [[0.5]], "B": [[1]]})"),
                  ParseError);
  ParseOptions opts;
  opts.float_mode = true;
  const auto parsed = parse_input_text(
      R"({"A": [[0.5, 1e-12],[0, 0]], "B": [[1],[1]]})", opts);
  CHECK(parsed.system->A(0, 0) == Rational(1, 2));
  CHECK(parsed.system->A(0, 1) == Rational(0));  // below the 1e-9 cutoff
}

TEST_CASE("graph JSON round trips and rejects duplicates at parse time") {
  const std::string text =
      R"({"n": 3, "m": 2, "edges": [{"from": "u1", "to": "x2", "sign": 1, "weight": "2"}]})";
  const auto input = parse_input_text(text);
  REQUIRE(input.graph.has_value());
  CHECK(input.graph->edges.size() == 1);
  CHECK(*input.graph->edges[0].weight == Rational(2));

  const auto g = system_to_graph(example_system());
  const auto round = parse_graph_json(graph_to_json(g));
  CHECK(graph_to_sign_pattern(round).A == example_system().A);

  CHECK_THROWS_AS(
      parse_input_text(
          R"({"n": 2, "m": 1, "edges": [
            {"from": "u1", "to": "x1", "sign": 1},
            {"from": "u1", "to": "x1", "sign": 1}]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_input_text(
          R"({"n": 2, "m": 1, "edges": [
            {"from": "u1", "to": "x1", "sign": 1, "weight": "-2"}]})"),
      ParseError);
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    parse_input_text("{\n  \"A\": [[1,]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 2);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}
