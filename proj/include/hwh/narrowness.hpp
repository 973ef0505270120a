#ifndef HWH_NARROWNESS_HPP
#define HWH_NARROWNESS_HPP

#include <optional>
#include <vector>

#include "hwh/graph.hpp"
#include "hwh/rational.hpp"
#include "hwh/report.hpp"

namespace hwh {

// Unnormalized nonnegative vertex weighting; good when every maximal perfect
// induced subgraph carries total at most 1.
struct GoodFunction {
  std::vector<Rational> f;

  Rational sum(VertexSet s) const;
  // sum of f(v)^alpha over s, integer alpha
  Rational power_sum(VertexSet s, unsigned long alpha) const;
  HighFloat power_sum_float(VertexSet s, const Rational& alpha) const;
};

struct GoodCheck {
  bool good = true;
  std::optional<VertexSet> violating;
};

enum class Verdict { narrow, not_narrow, inconclusive };
const char* verdict_name(Verdict v);

struct NarrownessCertificate {
  Rational alpha;
  Verdict verdict = Verdict::narrow;
  HighFloat max_value;
  std::optional<Rational> exact_max;  // set when the maximum is exactly determined
  GoodFunction argmax;
  long bases_enumerated = 0;
  long feasible_vertices = 0;
};

struct NarrownessQuery {
  Rational alpha;
  std::optional<Rational> alpha_prime;
  std::optional<Rational> d;
};

GoodCheck is_good(const Graph& g, const GoodFunction& f);

// Maximum of sum f(v)^alpha over the good-function polytope, by exact
// enumeration of all n-subsets of the constraints (maximal perfect sets plus
// nonnegativity facets). Integer alpha is decided in exact rationals;
// otherwise values of fractional-coordinate vertices within 1e-9 of 1 make
// the verdict inconclusive (0/1 vertices evaluate exactly for every alpha).
NarrownessCertificate certify_narrow(const Graph& g, const Rational& alpha);

// Good, sum f^alpha > 1, and every one-vertex-deleted subgraph is narrow
// (narrowness is hereditary, so this covers all proper induced subgraphs).
bool check_critical(const Graph& g, const GoodFunction& f, const Rational& alpha);

// Consequence checks on a certified critical pair: vertex weights stay below
// 1 - 4^(-1/alpha) when alpha >= 2, and no disjoint complete-or-anticomplete
// pair has both power sums above 2^(-alpha). Violations are tagged smalldeg
// or strongEH individually; the report id is strongEH.
LemmaReport critical_consequences(const Graph& g, const GoodFunction& f, const Rational& alpha);

// A clique or stable set of size at least n^(1/(2 alpha)), which narrowness
// guarantees to exist.
VertexSet eh_from_narrow(const Graph& g, const Rational& alpha);

// Bound transfer on a connected guarded Z: with d the maximum power sum over
// closed neighbourhoods in Z, sum over Z stays below max(2d, d^(1-a'/a)).
LemmaReport homog_bound_check(const Graph& g, VertexSet Z, const GoodFunction& gfun,
                              const Rational& alpha, const Rational& alpha_prime);

}  // namespace hwh

#endif
