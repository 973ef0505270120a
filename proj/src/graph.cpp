#include "hwh/graph.hpp"

#include <algorithm>

namespace hwh {

bool lex_set_less(VertexSet a, VertexSet b) {
  while (a != 0 && b != 0) {
    int va = lowest_vertex(a);
    int vb = lowest_vertex(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  HWH_FOR_EACH_VERTEX(v, s) out.push_back(v);
  return out;
}

VertexSet set_from_members(const std::vector<int>& members) {
  VertexSet s = 0;
  for (int v : members) s |= bit(v);
  return s;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  HWH_FOR_EACH_VERTEX(v, s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

long Graph::edge_count() const {
  long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("vertex count out of range: " + std::to_string(n));
  std::vector<VertexSet> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    if (u == v)
      throw PreconditionError("self-loop rejected: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return Graph(n, std::move(rows));
}

Graph complement(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = (~g.neighbours(v) & full_set(n)) & ~bit(v);
  return Graph(n, std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* map_out) {
  std::vector<int> map(g.n(), -1);
  int k = 0;
  HWH_FOR_EACH_VERTEX(v, keep) map[v] = k++;
  std::vector<VertexSet> rows(k, 0);
  HWH_FOR_EACH_VERTEX(v, keep) {
    HWH_FOR_EACH_VERTEX(u, g.neighbours(v) & keep) rows[map[v]] |= bit(map[u]);
  }
  if (map_out) *map_out = std::move(map);
  return Graph(k, std::move(rows));
}

VertexSet component_of(const Graph& g, int v, VertexSet X) {
  VertexSet comp = bit(v);
  VertexSet frontier = comp;
  while (frontier != 0) {
    VertexSet next = 0;
    HWH_FOR_EACH_VERTEX(u, frontier) next |= g.neighbours(u) & X;
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& g, VertexSet X, Side side) {
  const Graph* h = &g;
  Graph comp_graph;
  if (side == Side::complement) {
    comp_graph = complement(g);
    h = &comp_graph;
  }
  std::vector<VertexSet> parts;
  VertexSet left = X;
  while (left != 0) {
    int v = lowest_vertex(left);
    VertexSet part = component_of(*h, v, X);
    parts.push_back(part);
    left &= ~part;
  }
  return parts;  // seeded from lowest remaining vertex, so ordered by smallest member
}

bool is_complete_between(const Graph& g, VertexSet A, VertexSet B) {
  HWH_FOR_EACH_VERTEX(v, A) {
    if ((g.neighbours(v) & B) != B) return false;
  }
  return true;
}

bool is_anticomplete_between(const Graph& g, VertexSet A, VertexSet B) {
  HWH_FOR_EACH_VERTEX(v, A) {
    if ((g.neighbours(v) & B) != 0) return false;
  }
  return true;
}

SetRelation relation(const Graph& g, VertexSet A, VertexSet B) {
  if (A == 0 || B == 0) throw PreconditionError("relation: empty side");
  if ((A & B) != 0) throw PreconditionError("relation: overlapping sets");
  if (is_complete_between(g, A, B)) return SetRelation::complete;
  if (is_anticomplete_between(g, A, B)) return SetRelation::anticomplete;
  return SetRelation::mixed;
}

SetRelation vertex_vs_set(const Graph& g, int v, VertexSet C) {
  if (contains(C, v)) throw PreconditionError("vertex_vs_set: vertex inside the set");
  return relation(g, bit(v), C);
}

bool is_mixed_on(const Graph& g, int v, VertexSet C) {
  VertexSet hit = g.neighbours(v) & C;
  return hit != 0 && hit != C;
}

VertexSet attachments(const Graph& g, VertexSet A) {
  VertexSet out = 0;
  HWH_FOR_EACH_VERTEX(v, A) out |= g.neighbours(v);
  return out & ~A;
}

bool is_connected(const Graph& g, VertexSet X) {
  if (X == 0) return false;
  return component_of(g, lowest_vertex(X), X) == X;
}

bool is_anticonnected(const Graph& g, VertexSet X) {
  if (X == 0) return false;
  // BFS in the complement without materialising it.
  VertexSet comp = bit(lowest_vertex(X));
  VertexSet frontier = comp;
  while (frontier != 0) {
    VertexSet next = 0;
    HWH_FOR_EACH_VERTEX(u, frontier) next |= ~g.neighbours(u) & X & ~bit(u);
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp == X;
}

VertexSet neighbours_in(const Graph& g, int v, VertexSet X) { return g.neighbours(v) & X; }

}  // namespace hwh
