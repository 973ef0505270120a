#include <doctest.h>

#include <random>
#include <sstream>

#include "hwh/io.hpp"
#include "oracles.hpp"

using namespace hwh;
using namespace hwh::oracles;

TEST_CASE("graph6 known encodings") {
  // standard encodings: K3 = "Bw", P4 = "Cr" (column-major upper triangle)
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6(to_graph6(path_graph(4))) == path_graph(4));
  CHECK(to_graph6(empty_graph(0)) == "?");
  CHECK(parse_graph6("?").n() == 0);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = int(rng() % 11);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) edges.push_back({u, v});
    Graph g = build_graph(n, edges);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  // the 63-vertex long form as well
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < 63; ++v) edges.push_back({0, v});
  Graph star = build_graph(63, edges);
  CHECK(parse_graph6(to_graph6(star)) == star);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);        // truncated triangle
  CHECK_THROWS_AS(parse_graph6("Bw?"), ParseError);      // trailing bytes
  CHECK_THROWS_AS(parse_graph6(std::string(1, char(20))), ParseError);
}

TEST_CASE("edge list round trip") {
  Graph g = build_graph(5, {{0, 1}, {2, 4}, {1, 3}});
  std::istringstream in(to_edge_list(g));
  CHECK(parse_edge_list(in) == g);

  std::istringstream bad1("3");
  CHECK_THROWS_AS(parse_edge_list(bad1), ParseError);
  std::istringstream bad2("3 1\n0 3\n");
  CHECK_THROWS_AS(parse_edge_list(bad2), ParseError);
  std::istringstream bad3("3 2\n0 1\n");
  CHECK_THROWS_AS(parse_edge_list(bad3), ParseError);
}

TEST_CASE("weight files") {
  std::vector<Rational> w = {make_rational(1, 3), make_rational(1, 6), make_rational(1, 2)};
  std::istringstream in(weights_to_string(w));
  CHECK(parse_weights(in) == w);

  std::istringstream bad1("n=2\n0 1/2\n");
  CHECK_THROWS_AS(parse_weights(bad1), ParseError);  // missing entry
  std::istringstream bad2("n=1\n0 -1/2\n");
  CHECK_THROWS_AS(parse_weights(bad2), ParseError);  // negative
  std::istringstream bad3("n=1\n0 1/0\n");
  CHECK_THROWS_AS(parse_weights(bad3), ParseError);
  std::istringstream bad4("x=1\n");
  CHECK_THROWS_AS(parse_weights(bad4), ParseError);
  std::istringstream bad5("n=2\n0 1/2\n0 1/2\n");
  CHECK_THROWS_AS(parse_weights(bad5), ParseError);  // duplicate index
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
