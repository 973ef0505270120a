#include "hwh/narrowness.hpp"

#include <algorithm>
#include <cstdint>

#include "hwh/decomposition.hpp"
#include "hwh/detectors.hpp"
#include "hwh/io.hpp"

namespace hwh {

namespace {

constexpr double kBandTolerance = 1e-9;

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

HighFloat float_pow(const Rational& base, const Rational& exponent) {
  return HighFloat::from(base).pow(HighFloat::from(exponent));
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::narrow: return "narrow";
    case Verdict::not_narrow: return "not-narrow";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Rational GoodFunction::sum(VertexSet s) const {
  Rational t(0);
  HWH_FOR_EACH_VERTEX(v, s) t += f[v];
  return t;
}

Rational GoodFunction::power_sum(VertexSet s, unsigned long alpha) const {
  Rational t(0);
  HWH_FOR_EACH_VERTEX(v, s) t += rational_pow(f[v], alpha);
  return t;
}

HighFloat GoodFunction::power_sum_float(VertexSet s, const Rational& alpha) const {
  HighFloat t;
  HWH_FOR_EACH_VERTEX(v, s) {
    if (f[v] == 0) continue;  // 0^a = 0 for a >= 1
    t += float_pow(f[v], alpha);
  }
  return t;
}

GoodCheck is_good(const Graph& g, const GoodFunction& f) {
  if (int(f.f.size()) != g.n()) throw PreconditionError("is_good: value count mismatch");
  for (const auto& x : f.f)
    if (x < 0) throw PreconditionError("is_good: negative entry");
  for (VertexSet s : max_perfect_subsets(g, g.vertices())) {
    if (f.sum(s) > 1) return {false, s};
  }
  return {true, std::nullopt};
}

namespace {

// Bareiss determinant of a 0/1-ish int64 matrix; entries stay bounded by
// minors of the input, far inside int64 for n <= 10.
std::int64_t bareiss_det(std::int64_t a[][12], int n) {
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k][j], a[swap][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct VertexEnumerator {
  const Graph& g;
  int n;
  std::vector<VertexSet> rows;  // constraint supports: maximal perfect sets, then singletons
  std::vector<int> rhs;         // 1 for set rows, 0 for nonnegativity rows
  int m = 0;                    // number of set rows

  long bases = 0;
  long feasible = 0;

  // called with each polytope vertex: coordinates num[v]/den, den > 0
  std::function<void(const std::int64_t*, std::int64_t)> visit;

  std::int64_t det_for(const std::vector<int>& picked, int replace_col) {
    std::int64_t a[12][12];
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c)
        a[r][c] = (replace_col == c) ? rhs[picked[r]] : (contains(rows[picked[r]], c) ? 1 : 0);
    }
    return bareiss_det(a, n);
  }

  void solve_leaf(const std::vector<int>& picked) {
    ++bases;
    std::int64_t den = det_for(picked, -1);
    if (den == 0) return;  // unreachable: the echelon guarantees independence
    std::int64_t num[12];
    for (int c = 0; c < n; ++c) num[c] = det_for(picked, c);
    if (den < 0) {
      den = -den;
      for (int c = 0; c < n; ++c) num[c] = -num[c];
    }
    for (int c = 0; c < n; ++c)
      if (num[c] < 0) return;
    for (int j = 0; j < m; ++j) {
      std::int64_t total = 0;
      HWH_FOR_EACH_VERTEX(v, rows[j]) total += num[v];
      if (total > den) return;
    }
    ++feasible;
    visit(num, den);
  }

  // Row-echelon recursion over increasing constraint indices (Bareiss
  // fraction-free updates keep everything in small integers); dependent rows
  // are skipped without descending.
  void recurse(int next, int depth, std::vector<std::int64_t> echelon,
               std::vector<int> pivot_col, std::vector<int>& picked) {
    if (depth == n) {
      solve_leaf(picked);
      return;
    }
    int total = int(rows.size());
    for (int i = next; i <= total - (n - depth); ++i) {
      std::int64_t row[12];
      for (int c = 0; c < n; ++c) row[c] = contains(rows[i], c) ? 1 : 0;
      std::int64_t prev = 1;
      for (int k = 0; k < depth; ++k) {
        std::int64_t pk = echelon[k * n + pivot_col[k]];
        std::int64_t rk = row[pivot_col[k]];
        for (int c = 0; c < n; ++c) row[c] = (row[c] * pk - rk * echelon[k * n + c]) / prev;
        prev = pk;
      }
      int pc = -1;
      for (int c = 0; c < n; ++c) {
        if (row[c] != 0) {
          pc = c;
          break;
        }
      }
      if (pc < 0) continue;  // dependent on the chosen rows
      std::vector<std::int64_t> e2 = echelon;
      e2.insert(e2.end(), row, row + n);
      std::vector<int> p2 = pivot_col;
      p2.push_back(pc);
      picked.push_back(i);
      recurse(i + 1, depth + 1, std::move(e2), std::move(p2), picked);
      picked.pop_back();
    }
  }

  void run() {
    std::vector<int> picked;
    recurse(0, 0, {}, {}, picked);
  }
};

}  // namespace

NarrownessCertificate certify_narrow(const Graph& g, const Rational& alpha) {
  if (alpha < 1) throw PreconditionError("certify_narrow: alpha must be at least 1");
  int n = g.n();
  if (n > 10)
    throw PreconditionError(
        "certify_narrow: vertex enumeration is guarded at n <= 10 and no brute-force-free "
        "mode exists");

  NarrownessCertificate cert;
  cert.alpha = alpha;
  cert.argmax.f.assign(n, Rational(0));
  if (n == 0) {
    cert.exact_max = Rational(0);
    cert.verdict = Verdict::narrow;
    return cert;
  }

  const bool exact_alpha = is_integer(alpha);
  const unsigned long alpha_int = exact_alpha ? alpha.get_num().get_ui() : 0;

  VertexEnumerator en{g, n};
  en.rows = max_perfect_subsets(g, g.vertices());
  en.m = int(en.rows.size());
  for (int v = 0; v < n; ++v) en.rows.push_back(bit(v));
  en.rhs.assign(en.m, 1);
  en.rhs.resize(en.rows.size(), 0);

  // best value: exact rationals when possible, MPFR otherwise
  bool have_best = false;
  Rational best_exact;
  bool best_is_exact = false;
  HighFloat best_float;
  bool saw_band_fractional = false;
  bool clearly_above = false;

  en.visit = [&](const std::int64_t* num, std::int64_t den) {
    GoodFunction f;
    f.f.reserve(n);
    for (int v = 0; v < n; ++v) {
      Rational q(long(num[v]), long(den));
      q.canonicalize();
      f.f.push_back(q);
    }
    Rational exact_val;
    HighFloat float_val;
    bool val_exact;
    if (exact_alpha) {
      exact_val = f.power_sum(g.vertices(), alpha_int);
      val_exact = true;
    } else {
      // 0/1 coordinates contribute exactly regardless of alpha
      bool all01 = true;
      long ones = 0;
      for (int v = 0; v < n; ++v) {
        if (f.f[v] == 0) continue;
        if (f.f[v] == 1)
          ++ones;
        else
          all01 = false;
      }
      if (all01) {
        exact_val = ones;
        val_exact = true;
      } else {
        float_val = f.power_sum_float(g.vertices(), alpha);
        val_exact = false;
        if (float_val.cmp(1.0 + kBandTolerance) > 0) clearly_above = true;
        else if (float_val.cmp(1.0 - kBandTolerance) >= 0) saw_band_fractional = true;
      }
    }
    if (val_exact && exact_val > 1) clearly_above = true;

    bool better;
    if (!have_best) {
      better = true;
    } else if (val_exact && best_is_exact) {
      better = exact_val > best_exact;
    } else {
      HighFloat lhs = val_exact ? HighFloat::from(exact_val) : float_val;
      HighFloat rhs = best_is_exact ? HighFloat::from(best_exact) : best_float;
      better = lhs.cmp(rhs) > 0;
    }
    if (better) {
      have_best = true;
      best_is_exact = val_exact;
      if (val_exact) {
        best_exact = exact_val;
        best_float = HighFloat::from(exact_val);
      } else {
        best_float = float_val;
      }
      cert.argmax = f;
    }
  };

  en.run();
  cert.bases_enumerated = en.bases;
  cert.feasible_vertices = en.feasible;

  cert.max_value = best_float;
  if (best_is_exact) cert.exact_max = best_exact;
  if (exact_alpha) {
    cert.verdict = (best_exact <= 1) ? Verdict::narrow : Verdict::not_narrow;
  } else if (clearly_above) {
    cert.verdict = Verdict::not_narrow;
  } else if (saw_band_fractional) {
    cert.verdict = Verdict::inconclusive;
  } else {
    cert.verdict = Verdict::narrow;
  }
  return cert;
}

bool check_critical(const Graph& g, const GoodFunction& f, const Rational& alpha) {
  if (alpha < 1) throw PreconditionError("check_critical: alpha must be at least 1");
  GoodCheck gc = is_good(g, f);
  if (!gc.good) return false;
  if (is_integer(alpha)) {
    if (!(f.power_sum(g.vertices(), alpha.get_num().get_ui()) > 1)) return false;
  } else {
    if (!(f.power_sum_float(g.vertices(), alpha).cmp(1.0 + kBandTolerance) > 0)) return false;
  }
  for (int v = 0; v < g.n(); ++v) {
    Graph sub = induced_subgraph(g, g.vertices() & ~bit(v));
    if (certify_narrow(sub, alpha).verdict != Verdict::narrow) return false;
  }
  return true;
}

LemmaReport critical_consequences(const Graph& g, const GoodFunction& f, const Rational& alpha) {
  if (!check_critical(g, f, alpha))
    throw PreconditionError("critical_consequences: (g,f) is not a certified critical pair");

  LemmaReport report;
  report.lemma = LemmaId::strong_eh;
  report.graphs_checked = 1;
  const bool exact_alpha = is_integer(alpha);
  const unsigned long alpha_int = exact_alpha ? alpha.get_num().get_ui() : 0;

  if (alpha >= 2) {
    // vertex bound 1 - 4^(-1/alpha); exact only at alpha = 2
    bool exact_bound = (alpha == 2);
    Rational bound_exact = exact_bound ? Rational(1, 2) : Rational(0);
    HighFloat bound_float =
        float_pow(Rational(4), Rational(-1) / alpha);  // 4^(-1/alpha)
    for (int v = 0; v < g.n(); ++v) {
      ++report.configs_checked;
      bool violated;
      if (exact_bound) {
        violated = f.f[v] >= bound_exact;
      } else {
        HighFloat lhs = HighFloat::from(f.f[v]) + bound_float;
        violated = lhs.cmp(Rational(1)) >= 0;  // f(v) >= 1 - 4^(-1/alpha)
      }
      if (violated) {
        report.violations.push_back({LemmaId::smalldeg,
                                     g,
                                     {{"vertex", bit(v)}},
                                     "vertex weight reaches 1 - 4^(-1/alpha)"});
      }
    }
  } else {
    report.notes.push_back("vertex bound skipped: alpha below 2");
  }

  // pairs (A,B) disjoint, nonempty, complete or anticomplete
  Rational threshold_exact;
  HighFloat threshold_float;
  if (exact_alpha)
    threshold_exact = rational_pow(Rational(1, 2), alpha_int);
  else
    threshold_float = float_pow(Rational(1, 2), alpha);

  auto heavy = [&](VertexSet s) {
    if (exact_alpha) return f.power_sum(s, alpha_int) > threshold_exact;
    return f.power_sum_float(s, alpha).cmp(threshold_float) > 0;
  };

  int n = g.n();
  std::vector<int> assign(n, 0);
  // iterate over 3^n assignments of vertices to A / B / neither
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    VertexSet A = 0, B = 0;
    for (int v = 0; v < n; ++v) {
      int t = c % 3;
      c /= 3;
      if (t == 1) A |= bit(v);
      if (t == 2) B |= bit(v);
    }
    if (A == 0 || B == 0) continue;
    if (lowest_vertex(A) > lowest_vertex(B)) continue;  // unordered pairs once
    if (!is_complete_between(g, A, B) && !is_anticomplete_between(g, A, B)) continue;
    ++report.configs_checked;
    if (heavy(A) && heavy(B)) {
      report.violations.push_back({LemmaId::strong_eh,
                                   g,
                                   {{"A", A}, {"B", B}},
                                   "both sides exceed 2^(-alpha)"});
    }
  }
  return report;
}

VertexSet eh_from_narrow(const Graph& g, const Rational& alpha) {
  NarrownessCertificate cert = certify_narrow(g, alpha);
  if (cert.verdict != Verdict::narrow)
    throw PreconditionError(std::string("eh_from_narrow: graph is not certified narrow (") +
                            verdict_name(cert.verdict) + ")");
  VertexSet clique = extremal_set(g, ExtremalKind::clique);
  VertexSet stable = extremal_set(g, ExtremalKind::stable);
  VertexSet pick = set_size(stable) > set_size(clique) ? stable : clique;
  // |pick|^(2 alpha) >= n, exactly in integers for rational alpha = p/q
  if (g.n() > 0) {
    unsigned long p = mpz_class(alpha.get_num()).get_ui();
    unsigned long q = mpz_class(alpha.get_den()).get_ui();
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), set_size(pick), 2 * p);
    mpz_ui_pow_ui(rhs.get_mpz_t(), g.n(), q);
    if (lhs < rhs)
      throw InternalInconsistency("eh_from_narrow: extremal set below the guaranteed bound");
  }
  return pick;
}

LemmaReport homog_bound_check(const Graph& g, VertexSet Z, const GoodFunction& gfun,
                              const Rational& alpha, const Rational& alpha_prime) {
  if (alpha_prime < 1 || alpha < alpha_prime)
    throw PreconditionError("homog_bound_check: need 1 <= alpha' <= alpha");
  if (set_size(Z) <= 1) throw PreconditionError("homog_bound_check: |Z| must exceed 1");
  if (!is_connected(g, Z)) throw PreconditionError("homog_bound_check: g[Z] disconnected");
  Graph gz = induced_subgraph(g, Z);
  if (!is_guarded(gz).guarded) throw PreconditionError("homog_bound_check: g[Z] not guarded");
  if (!is_good(g, gfun).good) throw PreconditionError("homog_bound_check: gfun not good on g");
  for (int v = 0; v < g.n(); ++v) {
    Graph sub = induced_subgraph(g, g.vertices() & ~bit(v));
    if (certify_narrow(sub, alpha).verdict != Verdict::narrow)
      throw PreconditionError(
          "homog_bound_check: a proper induced subgraph fails alpha-narrowness (deleted "
          "vertex " +
          std::to_string(v) + ")");
  }

  LemmaReport report;
  report.lemma = LemmaId::homog_bound;
  report.graphs_checked = 1;
  report.configs_checked = 1;

  if (is_anticonnected(g, Z)) {
    // instantiate the forcer-free hypothesis on the quotient graph
    HomogeneousPartition parts = homogeneous_partition(g, Z);
    VertexSet reps = 0;
    for (VertexSet part : parts.parts) reps |= bit(lowest_vertex(part));
    Graph quotient = induced_subgraph(g, reps);
    if (has_forcer(quotient))
      throw PreconditionError("homog_bound_check: quotient graph contains a forcer");
    if (certify_narrow(quotient, alpha_prime).verdict != Verdict::narrow)
      throw PreconditionError("homog_bound_check: quotient graph fails alpha'-narrowness");
    report.notes.push_back("forcer-free hypothesis instantiated on the quotient graph");
  } else {
    report.notes.push_back("g[Z] not anticonnected: two-neighbourhood cover gives the 2d bound");
  }

  const bool exact_alpha = is_integer(alpha);
  Rational d_exact(0);
  HighFloat d_float;
  HWH_FOR_EACH_VERTEX(v, Z) {
    VertexSet nz = g.neighbours(v) & Z;
    if (exact_alpha) {
      Rational s = gfun.power_sum(nz, alpha.get_num().get_ui());
      if (s > d_exact) d_exact = s;
    } else {
      HighFloat s = gfun.power_sum_float(nz, alpha);
      if (s.cmp(d_float) > 0) d_float = s;
    }
  }
  if (exact_alpha) d_float = HighFloat::from(d_exact);

  Rational lhs_exact;
  HighFloat lhs_float;
  if (exact_alpha) {
    lhs_exact = gfun.power_sum(Z, alpha.get_num().get_ui());
    lhs_float = HighFloat::from(lhs_exact);
  } else {
    lhs_float = gfun.power_sum_float(Z, alpha);
  }

  Rational exponent = 1 - alpha_prime / alpha;
  bool d_zero = exact_alpha ? (d_exact == 0) : (d_float.cmp(0.0) == 0);
  bool d_one = exact_alpha && d_exact == 1;

  // the bound is an exact rational when d^(1-a'/a) collapses
  if (exact_alpha && (exponent == 0 || d_zero || d_one)) {
    Rational d_pow = d_zero ? (exponent == 0 ? Rational(1) : Rational(0)) : Rational(1);
    Rational bound = std::max(Rational(2) * d_exact, d_pow);
    report.notes.push_back("d=" + to_string(d_exact) + " lhs=" + to_string(lhs_exact) +
                           " bound=" + to_string(bound) + " (exact)");
    if (lhs_exact > bound) {
      report.violations.push_back({LemmaId::homog_bound,
                                   g,
                                   {{"Z", Z}},
                                   "power sum over Z exceeds max(2d, d^(1-a'/a))"});
    }
    return report;
  }

  HighFloat two_d = HighFloat::from_double(2.0) * d_float;
  HighFloat d_pow = d_zero ? HighFloat() : d_float.pow(HighFloat::from(exponent));
  HighFloat bound = two_d.cmp(d_pow) >= 0 ? two_d : d_pow;

  report.notes.push_back("d=" + d_float.str(20) + " lhs=" + lhs_float.str(20) +
                         " bound=" + bound.str(20));
  HighFloat diff = lhs_float - bound;
  if (diff.cmp(kBandTolerance) > 0) {
    report.violations.push_back({LemmaId::homog_bound,
                                 g,
                                 {{"Z", Z}},
                                 "power sum over Z exceeds max(2d, d^(1-a'/a))"});
  } else if (diff.abs().cmp(kBandTolerance) <= 0) {
    report.notes.push_back("inconclusive: within the tolerance band of the bound");
  }
  return report;
}

}  // namespace hwh
