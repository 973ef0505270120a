#include <doctest.h>

#include "hwh/graph.hpp"
#include "oracles.hpp"

using namespace hwh;
using namespace hwh::oracles;

TEST_CASE("build_graph basics") {
  Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(p5.n() == 5);
  CHECK(p5.edge_count() == 4);
  CHECK(p5.adjacent(0, 1));
  CHECK(!p5.adjacent(0, 2));

  Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5.edge_count() == 5);

  // duplicate pairs collapse
  Graph dup = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(build_graph(-1, {}), PreconditionError);
}

TEST_CASE("complement") {
  // complement of P5 is the house: C4 plus a hat
  Graph h = complement(path_graph(5));
  CHECK(h.edge_count() == 6);
  CHECK(has_hole_with_hat_brute(h));

  CHECK(complement(empty_graph(4)) == complete_graph(4));

  // involution on everything small
  for (int n = 0; n <= 5; ++n) {
    int t = n * (n - 1) / 2;
    for (std::uint64_t em = 0; em < (std::uint64_t(1) << t); ++em) {
      std::vector<std::pair<int, int>> edges;
      int p = 0;
      for (int c = 1; c < n; ++c)
        for (int r = 0; r < c; ++r, ++p)
          if ((em >> p) & 1) edges.push_back({r, c});
      Graph g = build_graph(n, edges);
      CHECK(complement(complement(g)) == g);
    }
  }
}

TEST_CASE("components direct and complement") {
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});  // P5 plus isolated 5
  auto parts = components(g, g.vertices(), Side::direct);
  REQUIRE(parts.size() == 2);
  CHECK(set_size(parts[0]) == 5);
  CHECK(set_size(parts[1]) == 1);

  // C5 is anticonnected
  CHECK(components(cycle_graph(5), full_set(5), Side::complement).size() == 1);

  // complement of K4 is edgeless
  auto anti = components(complete_graph(4), full_set(4), Side::complement);
  CHECK(anti.size() == 4);
  for (auto part : anti) CHECK(set_size(part) == 1);

  CHECK(components(g, 0, Side::direct).empty());
}

TEST_CASE("relation and vertex_vs_set") {
  // colour classes of K(2,3)
  Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(relation(k23, bit(0) | bit(1), bit(2) | bit(3) | bit(4)) == SetRelation::complete);

  Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK(relation(two, bit(0) | bit(1), bit(2) | bit(3)) == SetRelation::anticomplete);

  Graph p5 = path_graph(5);
  CHECK(relation(p5, bit(1), bit(2) | bit(4)) == SetRelation::mixed);

  CHECK_THROWS_AS(relation(p5, 0, bit(1)), PreconditionError);
  CHECK_THROWS_AS(relation(p5, bit(1), bit(1) | bit(2)), PreconditionError);
  CHECK_THROWS_AS(vertex_vs_set(p5, 1, bit(1) | bit(2)), PreconditionError);

  // hat vertex of the house against its hole-neighbours
  Graph h = house();
  auto hwh = find_hole_with_hat(h);
  REQUIRE(hwh.has_value());
  VertexSet two_nbrs = h.neighbours(hwh->hat) & hwh->hole_set();
  CHECK(vertex_vs_set(h, hwh->hat, two_nbrs) == SetRelation::complete);
  CHECK(vertex_vs_set(h, hwh->hat, hwh->hole_set()) == SetRelation::mixed);

  Graph iso = build_graph(3, {{1, 2}});
  CHECK(vertex_vs_set(iso, 0, bit(1) | bit(2)) == SetRelation::anticomplete);
}

TEST_CASE("attachments") {
  Graph p5 = path_graph(5);
  CHECK(attachments(p5, bit(0)) == bit(1));

  Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK(attachments(two, bit(0) | bit(1)) == 0);

  Graph c5 = cycle_graph(5);
  CHECK(attachments(c5, bit(1) | bit(2)) == (bit(0) | bit(3)));

  // attachments never meet the set and always have a neighbour inside
  for (VertexSet a = 0; a <= c5.vertices(); ++a) {
    VertexSet att = attachments(c5, a);
    CHECK((att & a) == 0);
    HWH_FOR_EACH_VERTEX(v, att) CHECK((c5.neighbours(v) & a) != 0);
    if (a == c5.vertices()) break;
  }
}

TEST_CASE("relation flips under complement") {
  for (int n = 2; n <= 6; ++n) {
    int t = n * (n - 1) / 2;
    std::uint64_t step = n <= 5 ? 1 : 7;  // sample at n = 6
    for (std::uint64_t em = 0; em < (std::uint64_t(1) << t); em += step) {
      std::vector<std::pair<int, int>> edges;
      int p = 0;
      for (int c = 1; c < n; ++c)
        for (int r = 0; r < c; ++r, ++p)
          if ((em >> p) & 1) edges.push_back({r, c});
      Graph g = build_graph(n, edges);
      Graph gc = complement(g);
      for (VertexSet A = 1; A < full_set(n); ++A) {
        for (VertexSet B = A + 1; B <= full_set(n); ++B) {
          if ((A & B) != 0 || B == 0) continue;
          bool comp_g = relation(g, A, B) == SetRelation::complete;
          bool anti_gc = relation(gc, A, B) == SetRelation::anticomplete;
          CHECK(comp_g == anti_gc);
          if (B == full_set(n)) break;
        }
      }
    }
  }
}

TEST_CASE("connectivity helpers") {
  Graph p4 = path_graph(4);
  CHECK(is_connected(p4, full_set(4)));
  CHECK(is_anticonnected(p4, full_set(4)));  // P4 is self-complementary
  CHECK(!is_connected(p4, bit(0) | bit(2)));
  CHECK(is_anticonnected(p4, bit(0) | bit(2)));
  CHECK(!is_connected(p4, 0));
  CHECK(!is_anticonnected(p4, 0));
  CHECK(is_connected(p4, bit(2)));
  CHECK(is_anticonnected(p4, bit(2)));

  // no set of size 2 or 3 is both connected and anticonnected
  for (int n = 2; n <= 3; ++n) {
    Graph k = complete_graph(n);
    CHECK(!(is_connected(k, full_set(n)) && is_anticonnected(k, full_set(n))));
  }
}

TEST_CASE("lex_set_less orders sorted sequences") {
  CHECK(lex_set_less(bit(0) | bit(5), bit(1) | bit(2)));
  CHECK(!lex_set_less(bit(1) | bit(2), bit(0) | bit(5)));
  CHECK(lex_set_less(bit(1), bit(1) | bit(2)));
  CHECK(!lex_set_less(bit(1) | bit(2), bit(1) | bit(2)));
}

TEST_CASE("induced subgraph relabels compactly") {
  Graph c5 = cycle_graph(5);
  std::vector<int> map;
  Graph sub = induced_subgraph(c5, bit(0) | bit(1) | bit(3), &map);
  CHECK(sub.n() == 3);
  CHECK(sub.edge_count() == 1);  // only 0-1 survives
  CHECK(map[0] == 0);
  CHECK(map[1] == 1);
  CHECK(map[3] == 2);
}
