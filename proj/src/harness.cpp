#include "hwh/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "hwh/detectors.hpp"
#include "hwh/io.hpp"
#include "hwh/narrowness.hpp"

namespace hwh {

unsigned parse_filters(const std::string& comma_list) {
  unsigned out = 0;
  std::istringstream in(comma_list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "connected") out |= filter::connected;
    else if (item == "hwh-free") out |= filter::hwh_free;
    else if (item == "forcer-free") out |= filter::forcer_free;
    else if (item == "house-free") out |= filter::house_free;
    else if (item == "perfect") out |= filter::perfect;
    else throw PreconditionError("unknown filter '" + item + "'");
  }
  return out;
}

bool passes_filters(const Graph& g, unsigned filters) {
  if ((filters & filter::connected) && !is_connected(g, g.vertices())) return false;
  if ((filters & filter::hwh_free) && has_hole_with_hat(g)) return false;
  if ((filters & filter::house_free) && has_house(g)) return false;
  if ((filters & filter::forcer_free) && has_forcer(g)) return false;
  if ((filters & filter::perfect) && !is_perfect(g).perfect) return false;
  return true;
}

namespace {

constexpr unsigned kHereditaryFilters =
    filter::hwh_free | filter::forcer_free | filter::house_free | filter::perfect;

struct CanonDfs {
  const Graph& g;
  int n;
  std::vector<int> perm;           // perm[label] = original vertex
  std::vector<std::uint32_t> cols;
  VertexSet assigned = 0;
  bool have_best = false;
  std::vector<std::uint32_t> best_cols;
  std::vector<int> best_perm;

  // -1 current prefix smaller, 0 equal, +1 larger than best
  int prefix_cmp(int depth) const {
    if (!have_best) return -1;
    for (int i = 0; i < depth; ++i) {
      if (cols[i] != best_cols[i]) return cols[i] < best_cols[i] ? -1 : 1;
    }
    return 0;
  }

  std::uint32_t column_of(int u, int depth) const {
    std::uint32_t col = 0;
    for (int r = 0; r < depth; ++r)
      col = (col << 1) | (g.adjacent(perm[r], u) ? 1 : 0);
    return col;
  }

  void dfs(int depth) {
    int cmp = prefix_cmp(depth);
    if (cmp > 0) return;
    if (depth == n) {
      if (cmp < 0) {
        have_best = true;
        best_cols = cols;
        best_perm = perm;
      }
      return;
    }
    std::uint32_t mincol = UINT32_MAX;
    int cand[kMaxVertices], cnt = 0;
    HWH_FOR_EACH_VERTEX(u, g.vertices() & ~assigned) {
      std::uint32_t col = column_of(u, depth);
      if (col < mincol) {
        mincol = col;
        cnt = 0;
      }
      if (col == mincol) cand[cnt++] = u;
    }
    if (cmp == 0 && mincol > best_cols[depth]) return;
    // interchangeable candidates (swap is an automorphism) explore once
    int kept[kMaxVertices], kcnt = 0;
    for (int i = 0; i < cnt; ++i) {
      int u = cand[i];
      bool twin = false;
      for (int j = 0; j < kcnt && !twin; ++j) {
        int w = kept[j];
        VertexSet mask = ~(bit(u) | bit(w));
        twin = (g.neighbours(u) & mask) == (g.neighbours(w) & mask);
      }
      if (!twin) kept[kcnt++] = u;
    }
    for (int i = 0; i < kcnt; ++i) {
      int u = kept[i];
      perm.push_back(u);
      cols.push_back(mincol);
      assigned |= bit(u);
      dfs(depth + 1);
      assigned &= ~bit(u);
      cols.pop_back();
      perm.pop_back();
    }
  }
};

}  // namespace

CanonKey canonical_key(const Graph& g) {
  int n = g.n();
  if (n > 11) throw PreconditionError("canonical_key: supported up to 11 vertices");
  if (n <= 1) return {n, 0};
  CanonDfs dfs{g, n};
  dfs.perm.reserve(n);
  dfs.cols.reserve(n);
  dfs.dfs(0);
  std::uint64_t bits = 0;
  int p = 0;
  for (int c = 1; c < n; ++c) {
    for (int r = 0; r < c; ++r, ++p) {
      if (g.adjacent(dfs.best_perm[r], dfs.best_perm[c])) bits |= std::uint64_t{1} << p;
    }
  }
  return {n, bits};
}

Graph graph_from_key(const CanonKey& key) {
  std::vector<std::pair<int, int>> edges;
  int p = 0;
  for (int c = 1; c < key.n; ++c)
    for (int r = 0; r < c; ++r, ++p)
      if ((key.bits >> p) & 1) edges.push_back({r, c});
  return build_graph(key.n, edges);
}

Graph canonical_form(const Graph& g) { return graph_from_key(canonical_key(g)); }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v)) edges.push_back({perm[u], perm[v]});
  return build_graph(g.n(), edges);
}

namespace {

Graph extend_graph(const Graph& g, VertexSet new_neighbours) {
  int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) edges.push_back({u, v});
  HWH_FOR_EACH_VERTEX(v, new_neighbours) edges.push_back({v, n});
  return build_graph(n + 1, edges);
}

}  // namespace

void enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& fn) {
  if (spec.canonical) {
    if (spec.n > 10) throw PreconditionError("enumerate_graphs: exhaustive mode capped at n <= 10");
    if (spec.n <= 0) return;
    unsigned level_filters = (spec.filters & kHereditaryFilters) | (spec.filters & filter::connected);
    std::vector<Graph> level;
    {
      Graph k1 = build_graph(1, {});
      if (passes_filters(k1, level_filters)) level.push_back(k1);
    }
    for (int k = 2; k <= spec.n && !level.empty(); ++k) {
      std::unordered_set<std::uint64_t> seen;
      std::vector<CanonKey> keys;
      for (const Graph& g : level) {
        for (VertexSet mask = 0; mask < (VertexSet(1) << (k - 1)); ++mask) {
          Graph ext = extend_graph(g, mask);
          CanonKey key = canonical_key(ext);
          if (!seen.insert(key.bits).second) continue;
          if (passes_filters(ext, level_filters)) keys.push_back(key);
        }
      }
      std::sort(keys.begin(), keys.end());
      level.clear();
      level.reserve(keys.size());
      for (const CanonKey& key : keys) level.push_back(graph_from_key(key));
    }
    if (spec.n == 1) {
      for (const Graph& g : level)
        if (passes_filters(g, spec.filters)) fn(g);
      return;
    }
    for (const Graph& g : level) fn(g);
    return;
  }

  // labelled mode, oracle scale
  if (spec.n > 6) throw PreconditionError("enumerate_graphs: labelled mode capped at n <= 6");
  if (spec.n < 0) throw PreconditionError("enumerate_graphs: negative n");
  int t = spec.n * (spec.n - 1) / 2;
  for (std::uint64_t em = 0; em < (std::uint64_t(1) << t); ++em) {
    Graph g = graph_from_key(CanonKey{spec.n, em});
    if (passes_filters(g, spec.filters)) fn(g);
  }
}

std::vector<Graph> enumerate_graphs(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate_graphs(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Fracture> enumerate_maximal_y_fractures(const Graph& g, bool require_y_attachments) {
  std::vector<Fracture> out;
  int n = g.n();
  for (VertexSet C = 1; C < (VertexSet(1) << n); ++C) {
    if (set_size(C) < 2) continue;
    if (!is_connected(g, C) || !is_anticonnected(g, C)) continue;
    VertexSet D = completers(g, C);
    if (D == 0) continue;
    VertexSet rest = g.vertices() & ~(C | D);
    for (VertexSet Y : components(g, rest, Side::direct)) {
      VertexSet att = attachments(g, Y);
      if ((att & C) != 0) continue;
      if (require_y_attachments && att == 0) continue;
      Split grown = optimalize_split(g, C, D, Y);
      if (grown.C != C) continue;  // not maximal; the grown split appears on its own
      out.push_back(fracture_from_split(g, Split{C, D}, Y));
    }
  }
  return out;
}

namespace {

// ---- wiggly configuration scans ----------------------------------------

// smallest nonadjacent pair (c1 adjacent to v, c2 not) inside an
// anticonnected set a mixed vertex splits
std::pair<int, int> mixed_witness_pair(const Graph& g, int v, VertexSet C) {
  HWH_FOR_EACH_VERTEX(c1, C & g.neighbours(v)) {
    HWH_FOR_EACH_VERTEX(c2, C & ~g.neighbours(v)) {
      if (!g.adjacent(c1, c2)) return {c1, c2};
    }
  }
  return {-1, -1};
}

LemmaReport wiggly1_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::wiggly1;
  report.graphs_checked = 1;
  int n = g.n();
  for (VertexSet C = 1; C < (VertexSet(1) << n); ++C) {
    if (!is_anticonnected(g, C)) continue;
    VertexSet comp = completers(g, C);
    // D over nonempty subsets of the completers, unordered pairs once
    for (VertexSet D = comp; D != 0; D = (D - 1) & comp) {
      if (lowest_vertex(C) > lowest_vertex(D)) continue;
      if (!is_anticonnected(g, D)) continue;
      HWH_FOR_EACH_VERTEX(v, g.vertices() & ~(C | D)) {
        ++report.configs_checked;
        if (is_mixed_on(g, v, C) && is_mixed_on(g, v, D)) {
          auto [c1, c2] = mixed_witness_pair(g, v, C);
          auto [d1, d2] = mixed_witness_pair(g, v, D);
          VertexSet five = bit(c1) | bit(c2) | bit(d1) | bit(d2) | bit(v);
          report.violations.push_back({LemmaId::wiggly1,
                                       g,
                                       {{"C", C}, {"D", D}, {"v", bit(v)}, {"house", five}},
                                       "mixed on both sides"});
        }
      }
    }
  }
  return report;
}

LemmaReport wiggly2_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::wiggly2;
  report.graphs_checked = 1;
  int n = g.n();
  for (VertexSet C = 1; C < (VertexSet(1) << n); ++C) {
    if (!is_connected(g, C)) continue;
    VertexSet comp = completers(g, C);
    VertexSet D = comp;
    while (true) {  // subsets of comp including the empty one
      VertexSet outside = g.vertices() & ~(C | D);
      for (VertexSet P = outside; P != 0; P = (P - 1) & outside) {
        if ((P & comp) != 0) continue;  // a vertex complete to C
        if ((attachments(g, P) & C) == 0) continue;
        if (!is_connected(g, P)) continue;
        HWH_FOR_EACH_VERTEX(v, P) {
          ++report.configs_checked;
          VertexSet need = g.neighbours(v) & D;
          bool found = false;
          HWH_FOR_EACH_VERTEX(u, P) {
            if (is_mixed_on(g, u, C) && (need & ~g.neighbours(u)) == 0) {
              found = true;
              break;
            }
          }
          if (!found) {
            report.violations.push_back({LemmaId::wiggly2,
                                         g,
                                         {{"C", C}, {"D", D}, {"P", P}, {"v", bit(v)}},
                                         "no mixed vertex covers v's D-neighbours"});
          }
        }
      }
      if (D == 0) break;
      D = (D - 1) & comp;
    }
  }
  return report;
}

LemmaReport wiggly3_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::wiggly3;
  report.graphs_checked = 1;
  int n = g.n();
  for (VertexSet C = 1; C < (VertexSet(1) << n); ++C) {
    if (!is_connected(g, C)) continue;
    VertexSet comp = completers(g, C);
    for (VertexSet D = comp; D != 0; D = (D - 1) & comp) {
      if (!is_anticonnected(g, D)) continue;
      VertexSet outside = g.vertices() & ~(C | D);
      for (VertexSet P = outside; P != 0; P = (P - 1) & outside) {
        if ((P & comp) != 0) continue;
        if ((attachments(g, P) & C) == 0) continue;
        if ((attachments(g, P) & D) == 0) continue;  // hypothesis: P meets D
        if (!is_connected(g, P)) continue;
        ++report.configs_checked;
        bool found = false;
        HWH_FOR_EACH_VERTEX(u, P) {
          if (is_mixed_on(g, u, C) && (D & ~g.neighbours(u)) == 0) {
            found = true;
            break;
          }
        }
        if (!found) {
          report.violations.push_back({LemmaId::wiggly3,
                                       g,
                                       {{"C", C}, {"D", D}, {"P", P}},
                                       "no vertex mixed on C and complete to D"});
        }
      }
    }
  }
  return report;
}

LemmaReport wiggly4_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::wiggly4;
  report.graphs_checked = 1;
  int n = g.n();
  for (VertexSet C = 1; C < (VertexSet(1) << n); ++C) {
    if (!is_connected(g, C) || !is_anticonnected(g, C)) continue;
    VertexSet comp = completers(g, C);
    for (VertexSet D = comp; D != 0; D = (D - 1) & comp) {
      if (!is_anticonnected(g, D)) continue;
      VertexSet outside = g.vertices() & ~(C | D);
      for (VertexSet P = outside; P != 0; P = (P - 1) & outside) {
        if ((P & comp) != 0) continue;
        if ((attachments(g, P) & C) == 0) continue;
        if (!is_connected(g, P)) continue;
        ++report.configs_checked;
        HWH_FOR_EACH_VERTEX(v, P) {
          if (is_mixed_on(g, v, D)) {
            report.violations.push_back({LemmaId::wiggly4,
                                         g,
                                         {{"C", C}, {"D", D}, {"P", P}, {"v", bit(v)}},
                                         "vertex of P mixed on D"});
          }
        }
      }
    }
  }
  return report;
}

LemmaReport wiggly5_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::wiggly5;
  report.graphs_checked = 1;
  int n = g.n();
  for (VertexSet C = 1; C < (VertexSet(1) << n); ++C) {
    if (!is_connected(g, C) || !is_anticonnected(g, C)) continue;
    VertexSet compC = completers(g, C);
    for (VertexSet D = compC; D != 0; D = (D - 1) & compC) {
      if (lowest_vertex(C) > lowest_vertex(D)) continue;
      if (!is_connected(g, D) || !is_anticonnected(g, D)) continue;
      VertexSet outside = g.vertices() & ~(C | D);
      VertexSet compD = completers(g, D);
      std::vector<VertexSet> candP, candQ;
      for (VertexSet P = outside; P != 0; P = (P - 1) & outside) {
        if (!is_connected(g, P)) continue;
        if ((P & compC) == 0 && (attachments(g, P) & C) != 0) candP.push_back(P);
        if ((P & compD) == 0 && (attachments(g, P) & D) != 0) candQ.push_back(P);
      }
      for (VertexSet P : candP) {
        for (VertexSet Q : candQ) {
          ++report.configs_checked;
          if ((P & Q) != 0) {
            report.violations.push_back({LemmaId::wiggly5,
                                         g,
                                         {{"C", C}, {"D", D}, {"P", P}, {"Q", Q}},
                                         "overlapping one-sided subgraphs"});
          }
        }
      }
    }
  }
  return report;
}

// ---- decomposition lemma scans ------------------------------------------

LemmaReport fracture_props_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::fracture_props;
  report.weight_free_reformulation = true;
  report.graphs_checked = 1;
  for (const Fracture& fr : enumerate_maximal_y_fractures(g, /*require_y_attachments=*/true)) {
    LemmaReport sub = check_fracture_properties(g, fr);
    report.configs_checked += sub.configs_checked;
    for (auto& v : sub.violations) report.violations.push_back(std::move(v));
  }
  if (report.notes.empty())
    report.notes.push_back("admissible fractures require attachments(Y) nonempty");
  return report;
}

LemmaReport crossing_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::crossing;
  report.weight_free_reformulation = true;
  report.graphs_checked = 1;
  std::vector<Fracture> frs = enumerate_maximal_y_fractures(g, false);
  for (size_t i = 0; i < frs.size(); ++i) {
    for (size_t j = i; j < frs.size(); ++j) {
      if ((frs[i].Y & frs[j].Y) == 0) continue;
      LemmaReport sub = crossing_check(g, frs[i], frs[j]);
      report.configs_checked += sub.configs_checked;
      for (auto& v : sub.violations) report.violations.push_back(std::move(v));
    }
  }
  return report;
}

// maximal cliques of the fulcrum-intersection graph, deterministic order
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (P.empty() && X.empty()) {
    emit(R);
    return;
  }
  while (!P.empty()) {
    int v = P.front();
    P.erase(P.begin());
    std::vector<int> P2, X2;
    for (int u : P)
      if (adj[v][u]) P2.push_back(u);
    for (int u : X)
      if (adj[v][u]) X2.push_back(u);
    R.push_back(v);
    bron_kerbosch(adj, R, std::move(P2), std::move(X2), emit);
    R.pop_back();
    X.push_back(v);
  }
}

LemmaReport small_side_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::small_side;
  report.weight_free_reformulation = true;
  report.graphs_checked = 1;
  std::vector<Fracture> frs = enumerate_maximal_y_fractures(g, false);
  int k = int(frs.size());
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && (frs[i].Y & frs[j].Y) != 0) adj[i][j] = 1;
  std::vector<int> all(k), R;
  for (int i = 0; i < k; ++i) all[i] = i;
  bron_kerbosch(adj, R, all, {}, [&](const std::vector<int>& clique) {
    std::vector<Fracture> family;
    for (int i : clique) family.push_back(frs[i]);
    LemmaReport sub = small_side_components(g, family);
    report.configs_checked += sub.configs_checked;
    for (auto& v : sub.violations) report.violations.push_back(std::move(v));
  });
  return report;
}

LemmaReport homog_partition_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::homog_partition;
  report.graphs_checked = 1;
  int n = g.n();
  for (VertexSet Z = 1; Z < (VertexSet(1) << n); ++Z) {
    if (set_size(Z) < 2) continue;
    if (!is_connected(g, Z) || !is_anticonnected(g, Z)) continue;
    ++report.configs_checked;
    try {
      homogeneous_partition(g, Z);
    } catch (const InternalInconsistency& e) {
      report.violations.push_back({LemmaId::homog_partition, g, {{"Z", Z}}, e.what()});
    }
  }
  return report;
}

// ---- weighted big-component scan -----------------------------------------

struct WeightFamily {
  const char* name;
  WeightMap w;
};

std::vector<WeightFamily> weight_families(int n) {
  std::vector<WeightFamily> out;
  if (n == 0) return out;
  out.push_back({"uniform", WeightMap::uniform(n)});
  {
    WeightMap m;
    long total = long(n) * (n + 1) / 2;
    for (int v = 0; v < n; ++v) m.w.push_back(make_rational(v + 1, total));
    out.push_back({"linear", m});
  }
  {
    WeightMap m;
    long total = (1L << n) - 1;
    for (int v = 0; v < n; ++v) m.w.push_back(make_rational(1L << v, total));
    out.push_back({"geometric", m});
  }
  return out;
}

const std::vector<Rational>& eps_grid() {
  static const std::vector<Rational> grid = {make_rational(1, 5), make_rational(1, 6),
                                             make_rational(1, 8)};
  return grid;
}

LemmaReport bigcomp_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::bigcomp;
  report.graphs_checked = 1;
  int n = g.n();
  for (const WeightFamily& fam : weight_families(n)) {
    for (const Rational& eps : eps_grid()) {
      for (VertexSet X = 1; X < (VertexSet(1) << n); ++X) {
        if (fam.w.weight(X) < 3 * eps) continue;
        if (!pair_condition_holds_within(g, fam.w, eps, X)) continue;
        ++report.configs_checked;
        Rational threshold = fam.w.weight(X) - eps;
        int hits = 0;
        for (VertexSet comp : components(g, X, Side::direct))
          if (fam.w.weight(comp) > threshold) ++hits;
        if (hits != 1) {
          report.violations.push_back(
              {LemmaId::bigcomp,
               g,
               {{"X", X}},
               std::string("family=") + fam.name + " eps=" + to_string(eps) +
                   " components_above_threshold=" + std::to_string(hits)});
        }
      }
    }
  }
  return report;
}

// ---- critical-pair scans --------------------------------------------------

LemmaReport critical_scan_on_graph(const Graph& g, LemmaId keep) {
  LemmaReport report;
  report.lemma = keep;
  report.graphs_checked = 1;
  std::vector<Rational> alphas;
  if (keep == LemmaId::smalldeg) alphas = {Rational(2)};
  else alphas = {Rational(1), Rational(2)};
  for (const Rational& alpha : alphas) {
    NarrownessCertificate cert = certify_narrow(g, alpha);
    if (cert.verdict != Verdict::not_narrow) continue;
    if (!check_critical(g, cert.argmax, alpha)) continue;
    report.notes.push_back("critical pair at alpha=" + to_string(alpha));
    LemmaReport sub = critical_consequences(g, cert.argmax, alpha);
    report.configs_checked += sub.configs_checked;
    for (auto& v : sub.violations) {
      if (v.lemma != keep) continue;
      v.note += " alpha=" + to_string(alpha);
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

// ---- homog bound scan -------------------------------------------------------

LemmaReport homog_bound_on_graph(const Graph& g) {
  LemmaReport report;
  report.lemma = LemmaId::homog_bound;
  report.graphs_checked = 1;
  const Rational alpha(2), alpha_prime(1);
  // all proper induced subgraphs alpha-narrow, once per graph
  for (int v = 0; v < g.n(); ++v) {
    Graph sub = induced_subgraph(g, g.vertices() & ~bit(v));
    if (certify_narrow(sub, alpha).verdict != Verdict::narrow) {
      report.notes.push_back("skipped: a proper induced subgraph is not 2-narrow");
      return report;
    }
  }
  int p = 0;
  for (VertexSet s : max_perfect_subsets(g, g.vertices())) p = std::max(p, set_size(s));
  if (p == 0) return report;
  GoodFunction gfun;
  gfun.f.assign(g.n(), make_rational(1, p));

  int n = g.n();
  for (VertexSet Z = 1; Z < (VertexSet(1) << n); ++Z) {
    if (set_size(Z) < 2) continue;
    if (!is_connected(g, Z)) continue;
    Graph gz = induced_subgraph(g, Z);
    if (!is_guarded(gz).guarded) continue;
    if (is_anticonnected(g, Z)) {
      HomogeneousPartition parts = homogeneous_partition(g, Z);
      VertexSet reps = 0;
      for (VertexSet part : parts.parts) reps |= bit(lowest_vertex(part));
      Graph quotient = induced_subgraph(g, reps);
      if (has_forcer(quotient) ||
          certify_narrow(quotient, alpha_prime).verdict != Verdict::narrow)
        continue;  // hypothesis not instantiable on this Z
    }
    LemmaReport sub = homog_bound_check(g, Z, gfun, alpha, alpha_prime);
    report.configs_checked += sub.configs_checked;
    for (auto& v : sub.violations) {
      v.note += " p=" + std::to_string(p);
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace

LemmaReport verify_lemma_on_graph(LemmaId id, const Graph& g) {
  switch (id) {
    case LemmaId::wiggly1: return wiggly1_on_graph(g);
    case LemmaId::wiggly2: return wiggly2_on_graph(g);
    case LemmaId::wiggly3: return wiggly3_on_graph(g);
    case LemmaId::wiggly4: return wiggly4_on_graph(g);
    case LemmaId::wiggly5: return wiggly5_on_graph(g);
    case LemmaId::fracture_props: return fracture_props_on_graph(g);
    case LemmaId::crossing: return crossing_on_graph(g);
    case LemmaId::small_side: return small_side_on_graph(g);
    case LemmaId::homog_partition: return homog_partition_on_graph(g);
    case LemmaId::bigcomp: return bigcomp_on_graph(g);
    case LemmaId::smalldeg: return critical_scan_on_graph(g, LemmaId::smalldeg);
    case LemmaId::strong_eh: return critical_scan_on_graph(g, LemmaId::strong_eh);
    case LemmaId::homog_bound: return homog_bound_on_graph(g);
  }
  throw PreconditionError("verify_lemma: invalid lemma id");
}

LemmaReport verify_lemma(LemmaId id, const EnumSpec& spec, int jobs) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs = enumerate_graphs(spec);
  LemmaReport report;
  report.lemma = id;

  if (jobs <= 1 || graphs.size() < 2) {
    for (const Graph& g : graphs) report.merge(verify_lemma_on_graph(id, g));
  } else {
    std::vector<LemmaReport> results(graphs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= graphs.size()) break;
        results[i] = verify_lemma_on_graph(id, graphs[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& r : results) report.merge(std::move(r));
  }
  // de-duplicate repeated per-graph notes
  std::sort(report.notes.begin(), report.notes.end());
  report.notes.erase(std::unique(report.notes.begin(), report.notes.end()), report.notes.end());
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string note_field(const std::string& note, const std::string& key) {
  size_t pos = note.find(key + "=");
  if (pos == std::string::npos) return "";
  pos += key.size() + 1;
  size_t end = note.find(' ', pos);
  return note.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

std::optional<VertexSet> maybe_set(const Violation& v, const std::string& name) {
  for (const auto& [key, mask] : v.sets)
    if (key == name) return mask;
  return std::nullopt;
}

}  // namespace

bool replay_violation(const Violation& v) {
  const Graph& g = v.graph;
  switch (v.lemma) {
    case LemmaId::wiggly1: {
      VertexSet C = v.find_set("C"), D = v.find_set("D"), vv = v.find_set("v");
      int x = lowest_vertex(vv);
      return C && D && (C & D) == 0 && is_anticonnected(g, C) && is_anticonnected(g, D) &&
             is_complete_between(g, C, D) && !contains(C | D, x) && is_mixed_on(g, x, C) &&
             is_mixed_on(g, x, D);
    }
    case LemmaId::wiggly2: {
      VertexSet C = v.find_set("C"), D = v.find_set("D"), P = v.find_set("P");
      int x = lowest_vertex(v.find_set("v"));
      if (!(C && is_connected(g, C) && (C & D) == 0 && is_complete_between(g, C, D))) return false;
      if ((P & (C | D)) != 0 || !is_connected(g, P)) return false;
      if ((attachments(g, P) & C) == 0) return false;
      if ((P & completers(g, C)) != 0) return false;
      if (!contains(P, x)) return false;
      VertexSet need = g.neighbours(x) & D;
      HWH_FOR_EACH_VERTEX(u, P) {
        if (is_mixed_on(g, u, C) && (need & ~g.neighbours(u)) == 0) return false;
      }
      return true;
    }
    case LemmaId::wiggly3: {
      VertexSet C = v.find_set("C"), D = v.find_set("D"), P = v.find_set("P");
      if (!(C && D && is_connected(g, C) && is_anticonnected(g, D) && (C & D) == 0 &&
            is_complete_between(g, C, D)))
        return false;
      if ((P & (C | D)) != 0 || !is_connected(g, P)) return false;
      if ((attachments(g, P) & C) == 0 || (attachments(g, P) & D) == 0) return false;
      if ((P & completers(g, C)) != 0) return false;
      HWH_FOR_EACH_VERTEX(u, P) {
        if (is_mixed_on(g, u, C) && (D & ~g.neighbours(u)) == 0) return false;
      }
      return true;
    }
    case LemmaId::wiggly4: {
      VertexSet C = v.find_set("C"), D = v.find_set("D"), P = v.find_set("P");
      int x = lowest_vertex(v.find_set("v"));
      return C && D && is_connected(g, C) && is_anticonnected(g, C) && is_anticonnected(g, D) &&
             (C & D) == 0 && is_complete_between(g, C, D) && (P & (C | D)) == 0 &&
             is_connected(g, P) && (attachments(g, P) & C) != 0 &&
             (P & completers(g, C)) == 0 && contains(P, x) && is_mixed_on(g, x, D);
    }
    case LemmaId::wiggly5: {
      VertexSet C = v.find_set("C"), D = v.find_set("D"), P = v.find_set("P"),
                Q = v.find_set("Q");
      auto side_ok = [&](VertexSet S) {
        return S && is_connected(g, S) && is_anticonnected(g, S);
      };
      return side_ok(C) && side_ok(D) && (C & D) == 0 && is_complete_between(g, C, D) &&
             (P & (C | D)) == 0 && (Q & (C | D)) == 0 && is_connected(g, P) &&
             is_connected(g, Q) && (P & Q) != 0 && (attachments(g, P) & C) != 0 &&
             (P & completers(g, C)) == 0 && (attachments(g, Q) & D) != 0 &&
             (Q & completers(g, D)) == 0;
    }
    case LemmaId::fracture_props: {
      Fracture fr{v.find_set("A"), v.find_set("C"), v.find_set("D"), v.find_set("B"),
                  v.find_set("Y")};
      LemmaReport rerun = check_fracture_properties(g, fr);
      for (const Violation& w : rerun.violations) {
        if (w.find_set("a") == v.find_set("a") && w.note == v.note &&
            maybe_set(w, "X") == maybe_set(v, "X"))
          return true;
      }
      return false;
    }
    case LemmaId::crossing: {
      auto rebuild = [&](const char* a, const char* c, const char* d, const char* y) {
        Fracture fr;
        fr.A = v.find_set(a);
        fr.C = v.find_set(c);
        fr.D = v.find_set(d);
        fr.Y = v.find_set(y);
        fr.B = g.vertices() & ~(fr.A | fr.C | fr.D);
        return fr;
      };
      Fracture f1 = rebuild("A1", "C1", "D1", "Y1");
      Fracture f2 = rebuild("A2", "C2", "D2", "Y2");
      if ((f1.Y & f2.Y) == 0) return false;
      LemmaReport rerun = crossing_check(g, f1, f2);
      for (const Violation& w : rerun.violations)
        if (w.find_set("component") == v.find_set("component")) return true;
      return false;
    }
    case LemmaId::small_side: {
      VertexSet comp = v.find_set("component");
      for (int i = 1;; ++i) {
        auto y = maybe_set(v, "Y" + std::to_string(i));
        if (!y) break;
        if (is_anticomplete_between(g, comp, *y)) return false;
      }
      return true;
    }
    case LemmaId::homog_partition: {
      try {
        homogeneous_partition(g, v.find_set("Z"));
        return false;
      } catch (const InternalInconsistency&) {
        return true;
      }
    }
    case LemmaId::bigcomp: {
      std::string fam = note_field(v.note, "family");
      Rational eps = parse_rational(note_field(v.note, "eps"));
      for (const WeightFamily& f : weight_families(g.n())) {
        if (fam != f.name) continue;
        VertexSet X = v.find_set("X");
        if (f.w.weight(X) < 3 * eps) return false;
        if (!pair_condition_holds_within(g, f.w, eps, X)) return false;
        Rational threshold = f.w.weight(X) - eps;
        int hits = 0;
        for (VertexSet comp : components(g, X, Side::direct))
          if (f.w.weight(comp) > threshold) ++hits;
        return hits != 1;
      }
      return false;
    }
    case LemmaId::smalldeg:
    case LemmaId::strong_eh: {
      Rational alpha = parse_rational(note_field(v.note, "alpha"));
      NarrownessCertificate cert = certify_narrow(g, alpha);
      if (cert.verdict != Verdict::not_narrow) return false;
      if (!check_critical(g, cert.argmax, alpha)) return false;
      LemmaReport rerun = critical_consequences(g, cert.argmax, alpha);
      for (const Violation& w : rerun.violations) {
        if (w.lemma != v.lemma) continue;
        if (v.lemma == LemmaId::smalldeg && w.find_set("vertex") == v.find_set("vertex"))
          return true;
        if (v.lemma == LemmaId::strong_eh && w.find_set("A") == v.find_set("A") &&
            w.find_set("B") == v.find_set("B"))
          return true;
      }
      return false;
    }
    case LemmaId::homog_bound: {
      long p = std::stol(note_field(v.note, "p"));
      GoodFunction gfun;
      gfun.f.assign(g.n(), make_rational(1, p));
      LemmaReport rerun = homog_bound_check(g, v.find_set("Z"), gfun, Rational(2), Rational(1));
      return !rerun.violations.empty();
    }
  }
  return false;
}

EhStats eh_statistics(int n, unsigned filters) {
  if (n < 1 || n > 9) throw PreconditionError("eh_statistics: n must be between 1 and 9");
  EhStats stats;
  stats.n = n;
  stats.min_value = n + 1;
  enumerate_graphs(EnumSpec{n, filters, true}, [&](const Graph& g) {
    ++stats.classes;
    int value = std::max(clique_number(g), stable_number(g));
    if (value < stats.min_value) {
      stats.min_value = value;
      stats.argmin = g;
    }
  });
  if (stats.classes == 0) {
    stats.min_value = 0;
    return stats;
  }
  stats.exponent = n > 1 ? std::log(double(stats.min_value)) / std::log(double(n)) : 0.0;
  return stats;
}

std::vector<FoundInstance> search_instances(const InstanceSearchSpec& spec) {
  if (!(spec.eps > 0) || 5 * spec.eps > 1)
    throw PreconditionError("search_instances: need 0 < eps with 5*eps <= 1");
  std::vector<FoundInstance> out;

  auto consider = [&](const Graph& g) {
    if (g.n() == 0) return;
    WeightMap w = WeightMap::uniform(g.n());
    if (has_hole_with_hat(g)) return;
    if (!check_coherence(g, w, spec.eps).ok) return;
    out.push_back({g, w, spec.eps});
  };

  if (spec.builder == InstanceSearchSpec::Builder::substitution) {
    if (int(spec.parts.size()) != spec.base.n())
      throw PreconditionError("search_instances: one part per template vertex required");
    int total = 0;
    for (auto [size, kind] : spec.parts) {
      if (size < 1) throw PreconditionError("search_instances: part sizes must be positive");
      total += size;
    }
    if (total > kMaxVertices)
      throw PreconditionError("search_instances: substituted graph exceeds 64 vertices");
    std::vector<int> offset(spec.base.n() + 1, 0);
    for (int i = 0; i < spec.base.n(); ++i) offset[i + 1] = offset[i] + spec.parts[i].first;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.base.n(); ++i) {
      if (spec.parts[i].second == SubstKind::clique) {
        for (int a = offset[i]; a < offset[i + 1]; ++a)
          for (int b = a + 1; b < offset[i + 1]; ++b) edges.push_back({a, b});
      }
      for (int j = i + 1; j < spec.base.n(); ++j) {
        if (!spec.base.adjacent(i, j)) continue;
        for (int a = offset[i]; a < offset[i + 1]; ++a)
          for (int b = offset[j]; b < offset[j + 1]; ++b) edges.push_back({a, b});
      }
    }
    consider(build_graph(total, edges));
    return out;
  }

  if (spec.random_n < 0 || spec.random_n > kMaxVertices)
    throw PreconditionError("search_instances: random_n out of range");
  if (spec.random_density < 0 || spec.random_density > 1)
    throw PreconditionError("search_instances: density must lie in [0,1]");
  std::mt19937_64 rng(spec.seed);
  unsigned long num = spec.random_density.get_num().get_ui();
  unsigned long den = spec.random_density.get_den().get_ui();
  for (long attempt = 0; attempt < spec.random_attempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < spec.random_n; ++u)
      for (int v = u + 1; v < spec.random_n; ++v)
        if (rng() % den < num) edges.push_back({u, v});
    consider(build_graph(spec.random_n, edges));
  }
  return out;
}

}  // namespace hwh
