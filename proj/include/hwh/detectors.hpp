#ifndef HWH_DETECTORS_HPP
#define HWH_DETECTORS_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "hwh/graph.hpp"

namespace hwh {

struct HoleWithHat {
  std::vector<int> hole;  // induced cycle in cyclic order, length >= 4
  int hat;                // adjacent to exactly two consecutive hole vertices
  VertexSet hole_set() const { return set_from_members(hole); }
};

struct Forcer {
  std::array<int, 4> path1;  // induced path v1-v2-v3-v4
  std::array<int, 4> path2;  // induced path v5-v6-v7-v8, complete to path1
  VertexSet path1_set() const;
  VertexSet path2_set() const;
  VertexSet vertex_set() const { return path1_set() | path2_set(); }
};

struct OddCycle {
  std::vector<int> cycle;
  bool in_complement;
};

struct PerfectnessWitness {
  bool perfect;
  std::optional<OddCycle> witness;
};

enum class ExtremalKind { clique, stable };

// Enumerates induced cycles with length in [min_len, max_len] inside
// `within`, smallest vertex first and smaller cycle-neighbour second.
// Callback returns true to stop; the function reports whether it stopped.
bool for_each_hole(const Graph& g, VertexSet within, int min_len, int max_len,
                   const std::function<bool(const std::vector<int>&)>& cb);

// Least witness by (hole length, sorted hole set, hat); absent iff the graph
// is hole-with-hat-free.
std::optional<HoleWithHat> find_hole_with_hat(const Graph& g);
bool has_hole_with_hat(const Graph& g);

// House = hole-with-hat whose hole has length four (same search, capped).
std::optional<HoleWithHat> find_house(const Graph& g);
bool has_house(const Graph& g);

// Least witness by (sorted 8-vertex set, then tuple order).
std::optional<Forcer> find_forcer(const Graph& g);
bool has_forcer(const Graph& g);
std::vector<Forcer> all_forcers(const Graph& g);

bool validate_hole_with_hat(const Graph& g, const HoleWithHat& h);
bool validate_forcer(const Graph& g, const Forcer& f);

// Strong-perfect-graph-theorem route: perfect iff no odd hole in the graph
// or its complement. The witness is the least odd hole on the failing side
// (graph side searched first).
PerfectnessWitness is_perfect(const Graph& g);

int max_clique_size(const Graph& g, VertexSet within, int stop_at = kMaxVertices + 1);
int clique_number(const Graph& g);
int stable_number(const Graph& g);

// Maximum clique (or stable set); among maximum ones, the least bitmask.
VertexSet extremal_set(const Graph& g, ExtremalKind kind);

// All inclusion-maximal S inside `restrict` with g[S] perfect, in increasing
// bitmask order. Empty restrict yields {0}.
std::vector<VertexSet> max_perfect_subsets(const Graph& g, VertexSet restrict_to);

}  // namespace hwh

#endif
