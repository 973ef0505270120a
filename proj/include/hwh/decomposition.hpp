#ifndef HWH_DECOMPOSITION_HPP
#define HWH_DECOMPOSITION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hwh/coherence.hpp"
#include "hwh/detectors.hpp"
#include "hwh/graph.hpp"
#include "hwh/report.hpp"

namespace hwh {

// (C,D) with C connected, anticonnected, |C| >= 2 and D exactly the vertices
// outside C complete to C.
struct Split {
  VertexSet C = 0, D = 0;
};

// Partition (A,C,D,B) of V with designated big component Y of g - (C u D):
// A = components of the rest attaching to C, B = the others (Y included),
// A u C anticomplete to B.
struct Fracture {
  VertexSet A = 0, C = 0, D = 0, B = 0, Y = 0;
};

// Intermediate partition of the split extraction: X1,X2 the maximal complete
// pair around the constituent paths, X3 the common completers, R1/R2 the
// one-sided completers of the remainder, S1/S2/S3 its components grouped by
// which side they attach to.
struct SplitConstruction {
  VertexSet X1 = 0, X2 = 0, X3 = 0, R1 = 0, R2 = 0, S1 = 0, S2 = 0, S3 = 0;
  VertexSet T() const { return X1 | X2 | X3 | R1 | R2; }
};

struct ConstructedSplit {
  Split split;
  VertexSet big = 0;  // component of g - (C u D) containing the designated one
  bool swapped = false;
  SplitConstruction construction;
};

struct HomogeneousPartition {
  std::vector<VertexSet> parts;
};

struct GuardednessResult {
  bool guarded = true;
  std::optional<Forcer> uncovered;
};

class HoleWithHatFound : public PreconditionError {
 public:
  HoleWithHatFound(const std::string& what, HoleWithHat witness)
      : PreconditionError(what), witness(std::move(witness)) {}
  HoleWithHat witness;
};

VertexSet completers(const Graph& g, VertexSet C);

// Grows both sides by single vertices (side 1 first, smallest index first)
// until no vertex can join either side.
std::pair<VertexSet, VertexSet> maximal_complete_pair(const Graph& g, VertexSet seed1,
                                                      VertexSet seed2);

SplitConstruction build_split_construction(const Graph& g, const Forcer& f);

// The 16 complete/anticomplete pair assertions plus the partition facts;
// throws InternalInconsistency naming the first failure.
void validate_split_construction(const Graph& g, const SplitConstruction& sc);

// Side selection given a designated component of g - T: swap sides when it
// lies in S1, keep X1 otherwise.
ConstructedSplit split_from_construction(const Graph& g, const SplitConstruction& sc,
                                         VertexSet designated_big);

// Full weighted pipeline: coherence check, hole-with-hat check, construction,
// big component of g - T, side selection.
Split split_from_forcer(const Graph& g, const WeightMap& w, const Rational& eps,
                        const Forcer& f);

bool is_Y_split(const Graph& g, VertexSet C, VertexSet D, VertexSet Y);

// Repeated smallest-index single-vertex augmentation, re-deriving D each
// step, until no vertex joins.
Split optimalize_split(const Graph& g, VertexSet C, VertexSet D, VertexSet Y);

Fracture fracture_from_split(const Graph& g, const Split& s, VertexSet Y);

bool validate_fracture(const Graph& g, const Fracture& fr, std::string* why = nullptr);

// Thm-3.4-shaped checks on one fracture: (i) some attachment of Y is
// nonadjacent to each a in A, (ii) no a in A is mixed on an anticomponent of
// g[D]. Violations are data, not errors.
LemmaReport check_fracture_properties(const Graph& g, const Fracture& fr);

// Crossing dichotomy for two fractures with intersecting fulcrums: every
// component of g[A1 u A2] inside one of A1, A2, or Y1 = Y2.
LemmaReport crossing_check(const Graph& g, const Fracture& fr1, const Fracture& fr2);

// Every component of g[union of the A_i] anticomplete to some fulcrum Y_i;
// fulcrums must pairwise intersect.
LemmaReport small_side_components(const Graph& g, const std::vector<Fracture>& fractures);

bool is_homogeneous(const Graph& g, VertexSet X, VertexSet universe);
VertexSet homogeneous_closure(const Graph& g, VertexSet S, VertexSet universe);

// All maximal proper homogeneous sets of g[Z]; they partition Z with more
// than one part whenever g[Z] is connected and anticonnected with |Z| > 1.
HomogeneousPartition homogeneous_partition(const Graph& g, VertexSet Z);

// Every forcer admits a proper homogeneous set containing a constituent
// path; the first uncovered forcer is returned otherwise.
GuardednessResult is_guarded(const Graph& g);

}  // namespace hwh

#endif
