#ifndef HWH_GRAPH_HPP
#define HWH_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hwh {

// Vertex sets are single-word bitmasks; graphs are capped at 64 vertices
// (the harness never goes past 10).
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline VertexSet bit(int v) { return VertexSet{1} << v; }

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

// Iterates v over the members of s in increasing order.
#define HWH_FOR_EACH_VERTEX(v, s)                                        \
  for (::hwh::VertexSet rest_ = (s); rest_ != 0; rest_ &= (rest_ - 1))   \
    if (const int v = ::hwh::lowest_vertex(rest_); true)

// Lexicographic order on the sorted member sequences (not integer order on
// the masks: {0,5} precedes {1,2}).
bool lex_set_less(VertexSet a, VertexSet b);

std::vector<int> set_members(VertexSet s);
VertexSet set_from_members(const std::vector<int>& members);
std::string set_to_string(VertexSet s);

enum class SetRelation { complete, anticomplete, mixed };
enum class Side { direct, complement };

class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

// Immutable simple graph. Row v is the neighbourhood bitmask of v; rows are
// kept symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {}

  int n() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }
  VertexSet neighbours(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1; }
  int degree(int v) const { return set_size(rows_[v]); }
  long edge_count() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complement(const Graph& g);

// Induced subgraph with vertices renumbered 0..|keep|-1 in increasing label
// order; `map_out`, when given, receives old-label -> new-label.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* map_out = nullptr);

// Parts ordered by smallest member. Empty X gives an empty list.
std::vector<VertexSet> components(const Graph& g, VertexSet X, Side side);

SetRelation relation(const Graph& g, VertexSet A, VertexSet B);
SetRelation vertex_vs_set(const Graph& g, int v, VertexSet C);
VertexSet attachments(const Graph& g, VertexSet A);

// Mask-level predicates. The *_between pair are vacuously true on empty
// sides; is_connected/is_anticonnected are false on the empty set.
bool is_complete_between(const Graph& g, VertexSet A, VertexSet B);
bool is_anticomplete_between(const Graph& g, VertexSet A, VertexSet B);
bool is_mixed_on(const Graph& g, int v, VertexSet C);
bool is_connected(const Graph& g, VertexSet X);
bool is_anticonnected(const Graph& g, VertexSet X);
VertexSet neighbours_in(const Graph& g, int v, VertexSet X);
VertexSet component_of(const Graph& g, int v, VertexSet X);

}  // namespace hwh

#endif
