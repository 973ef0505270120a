#include "hwh/coherence.hpp"

namespace hwh {

Rational WeightMap::total() const {
  Rational t(0);
  for (const auto& x : w) t += x;
  return t;
}

Rational WeightMap::weight(VertexSet s) const {
  Rational t(0);
  HWH_FOR_EACH_VERTEX(v, s) t += w[v];
  return t;
}

bool WeightMap::nonnegative() const {
  for (const auto& x : w)
    if (x < 0) return false;
  return true;
}

WeightMap WeightMap::uniform(int n) {
  WeightMap m;
  m.w.assign(n, n > 0 ? Rational(1, n) : Rational(0));
  for (auto& q : m.w) q.canonicalize();
  return m;
}

const char* condition_name(CoherenceCondition c) {
  switch (c) {
    case CoherenceCondition::vertex_weight: return "vertex-weight";
    case CoherenceCondition::neighbourhood_weight: return "neighbourhood-weight";
    case CoherenceCondition::anticomplete_pair: return "anticomplete-pair";
  }
  return "?";
}

CoherenceReport check_coherence(const Graph& g, const WeightMap& w, const Rational& eps) {
  if (w.size() != g.n()) throw PreconditionError("check_coherence: weight count mismatch");
  if (!(eps > 0)) throw PreconditionError("check_coherence: eps must be positive");
  if (!w.normalized())
    throw PreconditionError("check_coherence: weights must be nonnegative with total 1");

  CoherenceReport report;
  report.eps = eps;
  for (int v = 0; v < g.n(); ++v) {
    if (w.w[v] >= eps)
      report.violations.push_back({CoherenceCondition::vertex_weight, v, bit(v), 0});
  }
  for (int v = 0; v < g.n(); ++v) {
    if (w.weight(g.neighbours(v)) >= eps)
      report.violations.push_back(
          {CoherenceCondition::neighbourhood_weight, v, g.neighbours(v), 0});
  }
  CoherenceViolation pair;
  if (!pair_condition_holds_within(g, w, eps, g.vertices(), &pair))
    report.violations.push_back(pair);
  report.ok = report.violations.empty();
  return report;
}

bool pair_condition_holds_within(const Graph& g, const WeightMap& w, const Rational& eps,
                                 VertexSet X, CoherenceViolation* out) {
  std::vector<int> vs = set_members(X);
  int k = int(vs.size());
  if (k > 26) throw PreconditionError("pair condition: subset scan beyond 26 vertices");
  for (VertexSet lm = 1; k > 0 && lm < (VertexSet(1) << k); ++lm) {
    VertexSet A = 0;
    HWH_FOR_EACH_VERTEX(i, lm) A |= bit(vs[i]);
    if (w.weight(A) < eps) continue;
    VertexSet B = X & ~(A | attachments(g, A));
    if (B == 0) continue;
    if (w.weight(B) < eps) continue;
    if (out) *out = {CoherenceCondition::anticomplete_pair, -1, A, B};
    return false;
  }
  return true;
}

VertexSet big_component(const Graph& g, const WeightMap& w, const Rational& eps, VertexSet X) {
  if (w.size() != g.n()) throw PreconditionError("big_component: weight count mismatch");
  if (!(eps > 0)) throw PreconditionError("big_component: eps must be positive");
  if (!w.nonnegative()) throw PreconditionError("big_component: negative weight");
  Rational wx = w.weight(X);
  if (wx < 3 * eps)
    throw PreconditionError("big_component: w(X) = " + to_string(wx) + " below 3*eps");
  if (!pair_condition_holds_within(g, w, eps, X))
    throw PreconditionError("big_component: anticomplete-pair condition fails inside X");

  Rational threshold = wx - eps;
  VertexSet found = 0;
  int count = 0;
  for (VertexSet comp : components(g, X, Side::direct)) {
    if (w.weight(comp) > threshold) {
      found = comp;
      ++count;
    }
  }
  if (count == 0)
    throw InternalInconsistency(
        "big_component: no component above w(X)-eps despite verified preconditions");
  if (count > 1)
    throw InternalInconsistency("big_component: big component not unique");
  return found;
}

}  // namespace hwh
