#include "hwh/detectors.hpp"

#include <algorithm>

namespace hwh {

VertexSet Forcer::path1_set() const { return set_from_members({path1.begin(), path1.end()}); }
VertexSet Forcer::path2_set() const { return set_from_members({path2.begin(), path2.end()}); }

namespace {

struct HoleDfs {
  const Graph& g;
  VertexSet within;
  int min_len, max_len;
  const std::function<bool(const std::vector<int>&)>& cb;
  std::vector<int> path;
  VertexSet path_mask = 0;
  bool stopped = false;

  // path = p0..pt; forbidden = union of N(p1..p_{t-1}). The next vertex must
  // be adjacent to pt only; adjacency to p0 closes a hole.
  void extend(VertexSet forbidden) {
    if (stopped) return;
    int s = path.front();
    int t = int(path.size()) - 1;
    VertexSet above_s = within & ~full_set(s + 1);
    VertexSet cand = g.neighbours(path[t]) & above_s & ~path_mask & ~forbidden;
    VertexSet closing = cand & g.neighbours(s);
    int cycle_len = t + 2;
    if (cycle_len >= 4 && cycle_len >= min_len) {
      HWH_FOR_EACH_VERTEX(u, closing) {
        if (path[1] < u) {
          path.push_back(u);
          if (cb(path)) stopped = true;
          path.pop_back();
          if (stopped) return;
        }
      }
    }
    if (cycle_len < max_len) {
      VertexSet forbidden_next = forbidden | g.neighbours(path[t]);
      HWH_FOR_EACH_VERTEX(u, cand & ~g.neighbours(s)) {
        path.push_back(u);
        path_mask |= bit(u);
        extend(forbidden_next);
        path_mask &= ~bit(u);
        path.pop_back();
        if (stopped) return;
      }
    }
  }

  bool run() {
    if (max_len < 4 || min_len > g.n()) return false;
    HWH_FOR_EACH_VERTEX(s, within) {
      path = {s};
      path_mask = bit(s);
      HWH_FOR_EACH_VERTEX(p1, g.neighbours(s) & within & ~full_set(s + 1)) {
        path.push_back(p1);
        path_mask |= bit(p1);
        extend(0);
        path_mask &= ~bit(p1);
        path.pop_back();
        if (stopped) return true;
      }
    }
    return false;
  }
};

// Least hat for a hole, or -1: outside vertex adjacent to exactly two hole
// vertices that are consecutive on the (induced) cycle.
int least_hat(const Graph& g, const std::vector<int>& hole, VertexSet hole_mask,
              VertexSet universe) {
  HWH_FOR_EACH_VERTEX(v, universe & ~hole_mask) {
    VertexSet hit = g.neighbours(v) & hole_mask;
    if (set_size(hit) != 2) continue;
    int a = lowest_vertex(hit);
    int b = lowest_vertex(hit & (hit - 1));
    if (g.adjacent(a, b)) return v;
  }
  return -1;
}

std::optional<HoleWithHat> find_hole_with_hat_capped(const Graph& g, int cap) {
  int n = g.n();
  for (int len = 4; len <= std::min(n - 1, cap); ++len) {
    std::optional<HoleWithHat> best;
    VertexSet best_set = 0;
    for_each_hole(g, g.vertices(), len, len, [&](const std::vector<int>& hole) {
      VertexSet hs = set_from_members(hole);
      int hat = least_hat(g, hole, hs, g.vertices());
      if (hat < 0) return false;
      if (!best || lex_set_less(hs, best_set) || (hs == best_set && hat < best->hat)) {
        best = HoleWithHat{hole, hat};
        best_set = hs;
      }
      return false;
    });
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

bool for_each_hole(const Graph& g, VertexSet within, int min_len, int max_len,
                   const std::function<bool(const std::vector<int>&)>& cb) {
  HoleDfs dfs{g, within, std::max(min_len, 4), std::min(max_len, set_size(within)), cb};
  return dfs.run();
}

std::optional<HoleWithHat> find_hole_with_hat(const Graph& g) {
  return find_hole_with_hat_capped(g, g.n());
}

bool has_hole_with_hat(const Graph& g) {
  return for_each_hole(g, g.vertices(), 4, g.n() - 1, [&](const std::vector<int>& hole) {
    return least_hat(g, hole, set_from_members(hole), g.vertices()) >= 0;
  });
}

std::optional<HoleWithHat> find_house(const Graph& g) {
  return find_hole_with_hat_capped(g, 4);
}

bool has_house(const Graph& g) {
  return for_each_hole(g, g.vertices(), 4, 4, [&](const std::vector<int>& hole) {
    return least_hat(g, hole, set_from_members(hole), g.vertices()) >= 0;
  });
}

bool validate_hole_with_hat(const Graph& g, const HoleWithHat& h) {
  size_t len = h.hole.size();
  if (len < 4) return false;
  VertexSet hs = h.hole_set();
  if (set_size(hs) != int(len)) return false;
  for (int v : h.hole)
    if (v < 0 || v >= g.n()) return false;
  for (size_t i = 0; i < len; ++i) {
    for (size_t j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.adjacent(h.hole[i], h.hole[j]) != consecutive) return false;
    }
  }
  if (h.hat < 0 || h.hat >= g.n() || contains(hs, h.hat)) return false;
  VertexSet hit = g.neighbours(h.hat) & hs;
  if (set_size(hit) != 2) return false;
  int a = lowest_vertex(hit);
  int b = lowest_vertex(hit & (hit - 1));
  return g.adjacent(a, b);
}

namespace {

// Canonical tuple of an induced P4 on `mask`, or nullopt: the order with the
// smaller endpoint first.
std::optional<std::array<int, 4>> path4_order(const Graph& g, VertexSet mask) {
  std::vector<int> vs = set_members(mask);
  int deg_sum = 0;
  std::array<int, 4> deg{};
  for (int i = 0; i < 4; ++i) {
    deg[i] = set_size(g.neighbours(vs[i]) & mask);
    deg_sum += deg[i];
  }
  if (deg_sum != 6) return std::nullopt;  // exactly 3 edges
  int ends[2], ei = 0;
  for (int i = 0; i < 4; ++i) {
    if (deg[i] == 3) return std::nullopt;
    if (deg[i] == 1) {
      if (ei == 2) return std::nullopt;
      ends[ei++] = vs[i];
    }
  }
  if (ei != 2) return std::nullopt;  // triangle + isolated has no degree-1 pair
  int start = std::min(ends[0], ends[1]);
  std::array<int, 4> order{};
  order[0] = start;
  VertexSet used = bit(start);
  for (int i = 1; i < 4; ++i) {
    VertexSet nxt = g.neighbours(order[i - 1]) & mask & ~used;
    if (nxt == 0) return std::nullopt;
    order[i] = lowest_vertex(nxt);
    used |= bit(order[i]);
  }
  return order;
}

bool tuple8_less(const Forcer& a, const Forcer& b) {
  std::array<int, 8> ta{a.path1[0], a.path1[1], a.path1[2], a.path1[3],
                        a.path2[0], a.path2[1], a.path2[2], a.path2[3]};
  std::array<int, 8> tb{b.path1[0], b.path1[1], b.path1[2], b.path1[3],
                        b.path2[0], b.path2[1], b.path2[2], b.path2[3]};
  return ta < tb;
}

// Checks one 8-set; fills the least-tuple forcer on it if any.
bool forcer_on_set(const Graph& g, const std::vector<int>& vs, Forcer* out) {
  bool found = false;
  Forcer best{};
  // partitions into two 4-sets; fix vs[0] in side one to halve the count
  for (unsigned pick = 0; pick < 128; ++pick) {
    VertexSet side1 = bit(vs[0]);
    for (int i = 0; i < 7; ++i)
      if ((pick >> i) & 1) side1 |= bit(vs[i + 1]);
    if (set_size(side1) != 4) continue;
    VertexSet all = set_from_members(vs);
    VertexSet side2 = all & ~side1;
    if (!is_complete_between(g, side1, side2)) continue;
    auto p1 = path4_order(g, side1);
    if (!p1) continue;
    auto p2 = path4_order(g, side2);
    if (!p2) continue;
    Forcer cand{*p1, *p2};
    if (tuple8_less(Forcer{*p2, *p1}, cand)) cand = Forcer{*p2, *p1};
    if (!found || tuple8_less(cand, best)) best = cand;
    found = true;
  }
  if (found && out) *out = best;
  return found;
}

// Visits the 8-subsets of [0,n) in lexicographic order of sorted tuples.
template <typename Fn>
void for_each_8_subset(int n, Fn fn) {
  if (n < 8) return;
  std::vector<int> c{0, 1, 2, 3, 4, 5, 6, 7};
  while (true) {
    if (fn(c)) return;
    int i = 7;
    while (i >= 0 && c[i] == n - 8 + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < 8; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

std::optional<Forcer> find_forcer(const Graph& g) {
  std::optional<Forcer> result;
  for_each_8_subset(g.n(), [&](const std::vector<int>& vs) {
    Forcer f;
    if (forcer_on_set(g, vs, &f)) {
      result = f;
      return true;
    }
    return false;
  });
  return result;
}

bool has_forcer(const Graph& g) { return find_forcer(g).has_value(); }

std::vector<Forcer> all_forcers(const Graph& g) {
  std::vector<Forcer> out;
  for_each_8_subset(g.n(), [&](const std::vector<int>& vs) {
    // collect every partition structure on this 8-set
    for (unsigned pick = 0; pick < 128; ++pick) {
      VertexSet side1 = bit(vs[0]);
      for (int i = 0; i < 7; ++i)
        if ((pick >> i) & 1) side1 |= bit(vs[i + 1]);
      if (set_size(side1) != 4) continue;
      VertexSet all = set_from_members(vs);
      VertexSet side2 = all & ~side1;
      if (!is_complete_between(g, side1, side2)) continue;
      auto p1 = path4_order(g, side1);
      if (!p1) continue;
      auto p2 = path4_order(g, side2);
      if (!p2) continue;
      Forcer cand{*p1, *p2};
      if (tuple8_less(Forcer{*p2, *p1}, cand)) cand = Forcer{*p2, *p1};
      out.push_back(cand);
    }
    return false;
  });
  return out;
}

bool validate_forcer(const Graph& g, const Forcer& f) {
  VertexSet s1 = f.path1_set(), s2 = f.path2_set();
  if (set_size(s1) != 4 || set_size(s2) != 4 || (s1 & s2) != 0) return false;
  for (int v : f.path1)
    if (v < 0 || v >= g.n()) return false;
  for (int v : f.path2)
    if (v < 0 || v >= g.n()) return false;
  auto is_induced_path = [&](const std::array<int, 4>& p) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    return true;
  };
  if (!is_induced_path(f.path1) || !is_induced_path(f.path2)) return false;
  if (!is_complete_between(g, s1, s2)) return false;
  // 3 + 3 + 16 edges on the 8 vertices
  Graph sub = induced_subgraph(g, s1 | s2);
  return sub.edge_count() == 22;
}

namespace {

std::optional<std::vector<int>> least_odd_hole(const Graph& g) {
  int n = g.n();
  for (int len = 5; len <= n; len += 2) {
    std::optional<std::vector<int>> best;
    VertexSet best_set = 0;
    for_each_hole(g, g.vertices(), len, len, [&](const std::vector<int>& hole) {
      VertexSet hs = set_from_members(hole);
      if (!best || lex_set_less(hs, best_set)) {
        best = hole;
        best_set = hs;
      }
      return false;
    });
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

PerfectnessWitness is_perfect(const Graph& g) {
  if (auto hole = least_odd_hole(g)) return {false, OddCycle{*hole, false}};
  if (auto antihole = least_odd_hole(complement(g))) return {false, OddCycle{*antihole, true}};
  return {true, std::nullopt};
}

namespace {

struct CliqueSolver {
  const Graph& g;
  int best = 0;
  int limit;

  void expand(int rsize, VertexSet P) {
    if (best >= limit) return;
    if (P == 0) {
      best = std::max(best, rsize);
      return;
    }
    // greedy colouring bound, processed in reverse colour order
    int order[kMaxVertices], colour[kMaxVertices], cnt = 0;
    VertexSet uncoloured = P;
    int c = 0;
    while (uncoloured != 0) {
      ++c;
      VertexSet avail = uncoloured;
      while (avail != 0) {
        int v = lowest_vertex(avail);
        order[cnt] = v;
        colour[cnt] = c;
        ++cnt;
        avail &= ~g.neighbours(v) & ~bit(v);
        uncoloured &= ~bit(v);
      }
    }
    VertexSet P2 = P;
    for (int i = cnt - 1; i >= 0; --i) {
      if (rsize + colour[i] <= best) return;
      int v = order[i];
      expand(rsize + 1, P2 & g.neighbours(v));
      if (best >= limit) return;
      P2 &= ~bit(v);
    }
  }
};

}  // namespace

int max_clique_size(const Graph& g, VertexSet within, int stop_at) {
  CliqueSolver solver{g, 0, stop_at};
  solver.expand(0, within);
  return solver.best;
}

int clique_number(const Graph& g) { return max_clique_size(g, g.vertices()); }
int stable_number(const Graph& g) { return clique_number(complement(g)); }

VertexSet extremal_set(const Graph& g, ExtremalKind kind) {
  Graph comp;
  const Graph* h = &g;
  if (kind == ExtremalKind::stable) {
    comp = complement(g);
    h = &comp;
  }
  int k = max_clique_size(*h, h->vertices());
  // least-bitmask maximum clique: walk the bits from the top, dropping a
  // vertex whenever a maximum clique survives without it
  VertexSet chosen = 0, cand = h->vertices();
  int need = k;
  for (int v = h->n() - 1; v >= 0; --v) {
    if (!contains(cand, v)) continue;
    if (max_clique_size(*h, cand & ~bit(v), need) >= need) {
      cand &= ~bit(v);
    } else {
      chosen |= bit(v);
      --need;
      cand = cand & ~bit(v) & h->neighbours(v);
    }
  }
  return chosen;
}

std::vector<VertexSet> max_perfect_subsets(const Graph& g, VertexSet restrict_to) {
  if (restrict_to == 0) return {0};
  std::vector<int> vs = set_members(restrict_to);
  int k = int(vs.size());
  if (k > 22) throw PreconditionError("max_perfect_subsets: restriction larger than 22 vertices");

  // localized copy so the DP indexes 0..k-1
  Graph sub = induced_subgraph(g, restrict_to);

  // minimally imperfect = odd hole or odd antihole spanning the subset (SPGT)
  auto spans_odd_hole = [&](const Graph& h, VertexSet m) {
    int sz = set_size(m);
    if (sz < 5 || sz % 2 == 0) return false;
    HWH_FOR_EACH_VERTEX(v, m) {
      if (set_size(h.neighbours(v) & m) != 2) return false;
    }
    return is_connected(h, m);
  };
  Graph subc = complement(sub);

  std::vector<char> perfect(size_t(1) << k, 1);
  for (VertexSet m = 1; m < (VertexSet(1) << k); ++m) {
    bool ok = true;
    HWH_FOR_EACH_VERTEX(v, m) {
      if (!perfect[m & ~bit(v)]) {
        ok = false;
        break;
      }
    }
    if (ok && (spans_odd_hole(sub, m) || spans_odd_hole(subc, m))) ok = false;
    perfect[m] = ok ? 1 : 0;
  }

  std::vector<VertexSet> out;
  VertexSet full = full_set(k);
  for (VertexSet m = 0; m <= full; ++m) {
    if (!perfect[m]) continue;
    bool maximal = true;
    HWH_FOR_EACH_VERTEX(v, full & ~m) {
      if (perfect[m | bit(v)]) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    // translate back to original labels
    VertexSet orig = 0;
    HWH_FOR_EACH_VERTEX(v, m) orig |= bit(vs[v]);
    out.push_back(orig);
    if (m == full) break;
  }
  return out;
}

}  // namespace hwh
