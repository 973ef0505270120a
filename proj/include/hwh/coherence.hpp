#ifndef HWH_COHERENCE_HPP
#define HWH_COHERENCE_HPP

#include <vector>

#include "hwh/graph.hpp"
#include "hwh/rational.hpp"

namespace hwh {

struct WeightMap {
  std::vector<Rational> w;

  int size() const { return int(w.size()); }
  Rational total() const;
  Rational weight(VertexSet s) const;
  bool nonnegative() const;
  bool normalized() const { return nonnegative() && total() == 1; }

  static WeightMap uniform(int n);
};

enum class CoherenceCondition { vertex_weight, neighbourhood_weight, anticomplete_pair };

struct CoherenceViolation {
  CoherenceCondition condition;
  int vertex = -1;       // conditions 1 and 2
  VertexSet A = 0, B = 0;  // condition 3
};

struct CoherenceReport {
  bool ok = true;
  Rational eps;
  std::vector<CoherenceViolation> violations;
};

const char* condition_name(CoherenceCondition c);

// Exact three-condition test. Condition 3 is checked over every A with
// B = V minus A minus N(A); any anticomplete pair extends to such a pair
// without losing weight, so this is exhaustive. Both heavy sides make a
// violation; the least-bitmask A is reported.
CoherenceReport check_coherence(const Graph& g, const WeightMap& w, const Rational& eps);

// Same check restricted to pairs inside X (what the big-component argument
// actually consumes).
bool pair_condition_holds_within(const Graph& g, const WeightMap& w, const Rational& eps,
                                 VertexSet X, CoherenceViolation* out = nullptr);

// The unique component Y of g[X] with w(Y) > w(X) - eps. Requires
// w(X) >= 3 eps and the pair condition inside X; a qualifying component then
// exists, and its absence is reported as an internal inconsistency.
VertexSet big_component(const Graph& g, const WeightMap& w, const Rational& eps, VertexSet X);

}  // namespace hwh

#endif
