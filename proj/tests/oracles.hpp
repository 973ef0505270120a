// Test-only independent oracles: brute-force routes the library must agree
// with. Everything here favours obviousness over speed.
#ifndef HWH_TESTS_ORACLES_HPP
#define HWH_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hwh/detectors.hpp"
#include "hwh/graph.hpp"
#include "hwh/narrowness.hpp"
#include "hwh/rational.hpp"

namespace hwh::oracles {

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return build_graph(n, e);
}

inline Graph empty_graph(int n) { return build_graph(n, {}); }

// house = complement of P5: 4-cycle plus a hat
inline Graph house() { return complement(path_graph(5)); }

// the 8-vertex forcer: paths 0-1-2-3 and 4-5-6-7, complete between
inline Graph forcer_graph() {
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}};
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 8; ++b) e.push_back({a, b});
  return build_graph(8, e);
}

inline int omega_brute(const Graph& g, VertexSet m) {
  if (m == 0) return 0;
  int v = lowest_vertex(m);
  return std::max(omega_brute(g, m & ~bit(v)), 1 + omega_brute(g, m & g.neighbours(v)));
}

inline int chi_brute(const Graph& g, VertexSet m, std::map<VertexSet, int>& memo) {
  if (m == 0) return 0;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  int v = lowest_vertex(m);
  VertexSet pool = m & ~bit(v);
  int best = 1 + int(set_size(m));
  // colour class containing v: independent subsets of pool extended by v
  for (VertexSet sub = pool;; sub = (sub - 1) & pool) {
    VertexSet cls = sub | bit(v);
    bool independent = true;
    HWH_FOR_EACH_VERTEX(a, cls) {
      if ((g.neighbours(a) & cls) != 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::min(best, 1 + chi_brute(g, m & ~cls, memo));
    if (sub == 0) break;
  }
  memo[m] = best;
  return best;
}

// chromatic number equals clique number on every induced subgraph
inline bool perfect_by_chi_omega(const Graph& g) {
  std::map<VertexSet, int> memo;
  for (VertexSet m = 0; m <= g.vertices(); ++m) {
    if ((m & g.vertices()) != m) continue;
    if (chi_brute(g, m, memo) != omega_brute(g, m)) return false;
    if (m == g.vertices()) break;
  }
  return true;
}

// exhaustive (cycle, vertex) pair scan
inline bool has_hole_with_hat_brute(const Graph& g) {
  int n = g.n();
  for (VertexSet S = 1; S < (VertexSet(1) << n); ++S) {
    if (set_size(S) < 4) continue;
    bool cyclic = is_connected(g, S);
    HWH_FOR_EACH_VERTEX(v, S) {
      if (set_size(g.neighbours(v) & S) != 2) {
        cyclic = false;
        break;
      }
    }
    if (!cyclic) continue;
    HWH_FOR_EACH_VERTEX(v, g.vertices() & ~S) {
      VertexSet hit = g.neighbours(v) & S;
      if (set_size(hit) != 2) continue;
      int a = lowest_vertex(hit);
      int b = lowest_vertex(hit & (hit - 1));
      if (g.adjacent(a, b)) return true;
    }
  }
  return false;
}

inline bool has_induced_path5(const Graph& g) {
  int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // check all ordered 5-tuples
  std::vector<int> idx(5);
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == 5) {
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (g.adjacent(idx[i], idx[j]) != (j == i + 1)) return false;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int i = 0; i < depth; ++i)
        if (idx[i] == v) used = true;
      if (used) continue;
      idx[depth] = v;
      if (rec(depth + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// labelled enumeration deduplicated by all n! permutations
inline long count_classes_permutation_oracle(int n, bool (*keep)(const Graph&) = nullptr) {
  int t = n * (n - 1) / 2;
  auto edge_bits = [&](const Graph& g) {
    std::uint64_t bits = 0;
    int p = 0;
    for (int c = 1; c < n; ++c)
      for (int r = 0; r < c; ++r, ++p)
        if (g.adjacent(r, c)) bits |= std::uint64_t{1} << p;
    return bits;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::uint64_t> canon;
  for (std::uint64_t em = 0; em < (std::uint64_t(1) << t); ++em) {
    std::vector<std::pair<int, int>> edges;
    int p = 0;
    for (int c = 1; c < n; ++c)
      for (int r = 0; r < c; ++r, ++p)
        if ((em >> p) & 1) edges.push_back({r, c});
    Graph g = build_graph(n, edges);
    if (keep && !keep(g)) continue;
    std::uint64_t best = ~std::uint64_t{0};
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::pair<int, int>> relab;
      for (auto [u, v] : edges) relab.push_back({perm[u], perm[v]});
      best = std::min(best, edge_bits(build_graph(n, relab)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  return long(canon.size());
}

// coarse rational grid plus local halving refinement around the incumbent;
// independent maximizer for the narrowness cross-check
inline double grid_polytope_max(const Graph& g, double alpha, int initial_den, int rounds) {
  int n = g.n();
  std::vector<VertexSet> cons = max_perfect_subsets(g, g.vertices());
  auto feasible = [&](const std::vector<double>& f) {
    for (double x : f)
      if (x < -1e-12) return false;
    for (VertexSet s : cons) {
      double tot = 0;
      HWH_FOR_EACH_VERTEX(v, s) tot += f[v];
      if (tot > 1 + 1e-12) return false;
    }
    return true;
  };
  auto value = [&](const std::vector<double>& f) {
    double t = 0;
    for (double x : f) t += std::pow(x, alpha);
    return t;
  };
  std::vector<double> best(n, 0.0);
  double best_val = 0;
  std::vector<int> coord(n, 0);
  // full grid at the initial resolution
  std::function<void(int, std::vector<double>&)> scan = [&](int d, std::vector<double>& f) {
    if (d == n) {
      if (feasible(f)) {
        double val = value(f);
        if (val > best_val) {
          best_val = val;
          best = f;
        }
      }
      return;
    }
    for (int k = 0; k <= initial_den; ++k) {
      f[d] = double(k) / initial_den;
      // partial feasibility prune
      bool ok = true;
      for (VertexSet s : cons) {
        double tot = 0;
        HWH_FOR_EACH_VERTEX(v, s) {
          if (v <= d) tot += f[v];
        }
        if (tot > 1 + 1e-12) {
          ok = false;
          break;
        }
      }
      if (ok) scan(d + 1, f);
    }
  };
  std::vector<double> f(n, 0.0);
  scan(0, f);
  // local refinement
  double step = 1.0 / initial_den;
  for (int r = 0; r < rounds; ++r) {
    step /= 2;
    bool improved = true;
    while (improved) {
      improved = false;
      for (int v = 0; v < n; ++v) {
        for (double delta : {step, -step}) {
          std::vector<double> cand = best;
          cand[v] = std::clamp(cand[v] + delta, 0.0, 1.0);
          if (feasible(cand)) {
            double val = value(cand);
            if (val > best_val + 1e-15) {
              best_val = val;
              best = cand;
              improved = true;
            }
          }
        }
      }
    }
  }
  return best_val;
}

}  // namespace hwh::oracles

#endif
