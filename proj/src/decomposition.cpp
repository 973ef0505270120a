#include "hwh/decomposition.hpp"

#include <algorithm>

#include "hwh/io.hpp"

namespace hwh {

VertexSet completers(const Graph& g, VertexSet C) {
  VertexSet out = 0;
  HWH_FOR_EACH_VERTEX(v, g.vertices() & ~C) {
    if ((g.neighbours(v) & C) == C) out |= bit(v);
  }
  return out;
}

namespace {

bool pair_side_ok(const Graph& g, VertexSet side, VertexSet other) {
  return is_connected(g, side) && is_anticonnected(g, side) &&
         is_complete_between(g, side, other);
}

}  // namespace

std::pair<VertexSet, VertexSet> maximal_complete_pair(const Graph& g, VertexSet seed1,
                                                      VertexSet seed2) {
  if (seed1 == 0 || seed2 == 0) throw PreconditionError("maximal_complete_pair: empty seed");
  if ((seed1 & seed2) != 0) throw PreconditionError("maximal_complete_pair: seeds overlap");
  if (!is_connected(g, seed1) || !is_connected(g, seed2))
    throw PreconditionError("maximal_complete_pair: seed not connected");
  if (!is_anticonnected(g, seed1) || !is_anticonnected(g, seed2))
    throw PreconditionError("maximal_complete_pair: seed not anticonnected");
  if (!is_complete_between(g, seed1, seed2))
    throw PreconditionError("maximal_complete_pair: seeds not complete to each other");

  VertexSet x1 = seed1, x2 = seed2;
  bool grew = true;
  while (grew) {
    grew = false;
    HWH_FOR_EACH_VERTEX(v, g.vertices() & ~(x1 | x2)) {
      if (pair_side_ok(g, x1 | bit(v), x2)) {
        x1 |= bit(v);
        grew = true;
        break;
      }
    }
    if (grew) continue;
    HWH_FOR_EACH_VERTEX(v, g.vertices() & ~(x1 | x2)) {
      if (pair_side_ok(g, x2 | bit(v), x1)) {
        x2 |= bit(v);
        grew = true;
        break;
      }
    }
  }
  return {x1, x2};
}

SplitConstruction build_split_construction(const Graph& g, const Forcer& f) {
  if (!validate_forcer(g, f)) throw PreconditionError("build_split_construction: invalid forcer");
  auto [x1, x2] = maximal_complete_pair(g, f.path1_set(), f.path2_set());
  SplitConstruction sc;
  sc.X1 = x1;
  sc.X2 = x2;
  VertexSet outside = g.vertices() & ~(x1 | x2);
  HWH_FOR_EACH_VERTEX(v, outside) {
    VertexSet nb = g.neighbours(v);
    bool c1 = (nb & x1) == x1;
    bool c2 = (nb & x2) == x2;
    if (c1 && c2)
      sc.X3 |= bit(v);
    else if (c1)
      sc.R1 |= bit(v);
    else if (c2)
      sc.R2 |= bit(v);
  }
  VertexSet rest = outside & ~(sc.X3 | sc.R1 | sc.R2);
  for (VertexSet comp : components(g, rest, Side::direct)) {
    bool a1 = !is_anticomplete_between(g, comp, x1);
    bool a2 = !is_anticomplete_between(g, comp, x2);
    if (a1 && a2)
      throw InternalInconsistency(
          "split construction: a remainder component attaches to both sides "
          "(host graph cannot be hole-with-hat-free)");
    if (a1)
      sc.S1 |= comp;
    else if (a2)
      sc.S2 |= comp;
    else
      sc.S3 |= comp;
  }
  return sc;
}

void validate_split_construction(const Graph& g, const SplitConstruction& sc) {
  const VertexSet parts[8] = {sc.X1, sc.X2, sc.X3, sc.R1, sc.R2, sc.S1, sc.S2, sc.S3};
  const char* names[8] = {"X1", "X2", "X3", "R1", "R2", "S1", "S2", "S3"};
  VertexSet all = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      if ((parts[i] & parts[j]) != 0)
        throw InternalInconsistency(std::string("split construction: ") + names[i] + " and " +
                                    names[j] + " overlap");
    }
    all |= parts[i];
  }
  if (all != g.vertices())
    throw InternalInconsistency("split construction: parts do not cover the graph");

  const std::pair<int, int> complete_pairs[5] = {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {4, 1}};
  for (auto [i, j] : complete_pairs) {
    if (!is_complete_between(g, parts[i], parts[j]))
      throw InternalInconsistency(std::string("split construction: (") + names[i] + "," +
                                  names[j] + ") not complete");
  }
  const std::pair<int, int> anticomplete_pairs[11] = {{3, 1}, {4, 0}, {5, 1}, {6, 0},
                                                      {7, 0}, {7, 1}, {5, 4}, {6, 3},
                                                      {5, 6}, {5, 7}, {6, 7}};
  for (auto [i, j] : anticomplete_pairs) {
    if (!is_anticomplete_between(g, parts[i], parts[j]))
      throw InternalInconsistency(std::string("split construction: (") + names[i] + "," +
                                  names[j] + ") not anticomplete");
  }
}

ConstructedSplit split_from_construction(const Graph& g, const SplitConstruction& sc,
                                         VertexSet designated_big) {
  VertexSet rest = g.vertices() & ~sc.T();
  if (designated_big == 0 || (designated_big & rest) != designated_big ||
      component_of(g, lowest_vertex(designated_big), rest) != designated_big)
    throw PreconditionError("split_from_construction: designated big component is not a "
                            "component of g minus T");

  ConstructedSplit out;
  out.construction = sc;
  out.swapped = (designated_big & sc.S1) != 0;
  VertexSet C = out.swapped ? sc.X2 : sc.X1;
  VertexSet D = out.swapped ? (sc.X1 | sc.X3 | sc.R2) : (sc.X2 | sc.X3 | sc.R1);
  if (D != completers(g, C))
    throw InternalInconsistency("split construction: derived D is not the completer set of C");
  out.split = Split{C, D};
  out.big = component_of(g, lowest_vertex(designated_big), g.vertices() & ~(C | D));
  if (!is_Y_split(g, C, D, out.big))
    throw InternalInconsistency("split construction: output fails the split invariants");
  return out;
}

Split split_from_forcer(const Graph& g, const WeightMap& w, const Rational& eps,
                        const Forcer& f) {
  if (!(eps > 0) || 5 * eps > 1)
    throw PreconditionError("split_from_forcer: need 0 < eps with 5*eps <= 1");
  CoherenceReport coh = check_coherence(g, w, eps);
  if (!coh.ok) {
    std::string what = "split_from_forcer: (g,w) is not eps-coherent; first violation: ";
    what += condition_name(coh.violations.front().condition);
    throw PreconditionError(what);
  }
  if (auto hwh = find_hole_with_hat(g)) {
    throw HoleWithHatFound("split_from_forcer: graph has a hole-with-hat (hole " +
                               set_to_string(hwh->hole_set()) + ", hat " +
                               std::to_string(hwh->hat) + ")",
                           *hwh);
  }
  SplitConstruction sc = build_split_construction(g, f);
  validate_split_construction(g, sc);
  VertexSet big = big_component(g, w, eps, g.vertices() & ~sc.T());
  return split_from_construction(g, sc, big).split;
}

bool is_Y_split(const Graph& g, VertexSet C, VertexSet D, VertexSet Y) {
  if (set_size(C) < 2) return false;
  if (!is_connected(g, C) || !is_anticonnected(g, C)) return false;
  if (D == 0 || D != completers(g, C)) return false;
  VertexSet rest = g.vertices() & ~(C | D);
  if (Y == 0 || (Y & rest) != Y) return false;
  if (component_of(g, lowest_vertex(Y), rest) != Y) return false;
  return (attachments(g, Y) & C) == 0;
}

namespace {

// One augmentation pass; returns true and updates (C, D) when some vertex
// joins.
bool grow_split_once(const Graph& g, VertexSet& C, VertexSet& D, VertexSet Y) {
  HWH_FOR_EACH_VERTEX(v, g.vertices() & ~C) {
    VertexSet C2 = C | bit(v);
    VertexSet D2 = completers(g, C2);
    if (is_Y_split(g, C2, D2, Y)) {
      C = C2;
      D = D2;
      return true;
    }
  }
  return false;
}

}  // namespace

Split optimalize_split(const Graph& g, VertexSet C, VertexSet D, VertexSet Y) {
  if (!is_Y_split(g, C, D, Y))
    throw PreconditionError("optimalize_split: (C,D,Y) is not a Y-split");
  while (grow_split_once(g, C, D, Y)) {
  }
  return Split{C, D};
}

Fracture fracture_from_split(const Graph& g, const Split& s, VertexSet Y) {
  VertexSet C = s.C, D = s.D;
  if (!is_Y_split(g, C, D, Y))
    throw PreconditionError("fracture_from_split: (C,D,Y) is not a Y-split");
  {
    VertexSet c = C, d = D;
    if (grow_split_once(g, c, d, Y))
      throw PreconditionError("fracture_from_split: split is not optimal for Y (vertex " +
                              std::to_string(lowest_vertex(c & ~C)) + " joins C)");
  }
  Fracture fr;
  fr.C = C;
  fr.D = D;
  fr.Y = Y;
  VertexSet rest = g.vertices() & ~(C | D);
  for (VertexSet comp : components(g, rest, Side::direct)) {
    if ((attachments(g, comp) & C) != 0)
      fr.A |= comp;
    else
      fr.B |= comp;
  }
  if ((Y & fr.B) != Y)
    throw InternalInconsistency("fracture_from_split: Y landed outside B");
  if (!is_anticomplete_between(g, fr.A | fr.C, fr.B))
    throw InternalInconsistency("fracture_from_split: A u C not anticomplete to B");
  return fr;
}

bool validate_fracture(const Graph& g, const Fracture& fr, std::string* why) {
  auto fail = [&](const char* reason) {
    if (why) *why = reason;
    return false;
  };
  VertexSet all = fr.A | fr.C | fr.D | fr.B;
  if (all != g.vertices()) return fail("A,C,D,B do not cover the graph");
  if ((fr.A & fr.C) || (fr.A & fr.D) || (fr.A & fr.B) || (fr.C & fr.D) || (fr.C & fr.B) ||
      (fr.D & fr.B))
    return fail("A,C,D,B are not disjoint");
  if (set_size(fr.C) < 2) return fail("C smaller than two vertices");
  if (!is_connected(g, fr.C) || !is_anticonnected(g, fr.C))
    return fail("C not connected and anticonnected");
  if (fr.D == 0 || fr.D != completers(g, fr.C)) return fail("D is not the completer set of C");
  VertexSet rest = fr.A | fr.B;
  VertexSet expect_a = 0;
  for (VertexSet comp : components(g, rest, Side::direct)) {
    if ((attachments(g, comp) & fr.C) != 0) expect_a |= comp;
  }
  if (expect_a != fr.A) return fail("A is not the union of components attaching to C");
  if (fr.Y == 0 || (fr.Y & fr.B) != fr.Y) return fail("Y not inside B");
  if (component_of(g, lowest_vertex(fr.Y), rest) != fr.Y)
    return fail("Y is not a component of g minus (C u D)");
  if ((attachments(g, fr.Y) & fr.C) != 0) return fail("C contains an attachment of Y");
  if (!is_anticomplete_between(g, fr.A | fr.C, fr.B)) return fail("A u C not anticomplete to B");
  return true;
}

LemmaReport check_fracture_properties(const Graph& g, const Fracture& fr) {
  VertexSet all = fr.A | fr.C | fr.D | fr.B;
  if ((all & ~g.vertices()) != 0 || (fr.Y & ~g.vertices()) != 0)
    throw PreconditionError("check_fracture_properties: masks outside the graph");

  LemmaReport report;
  report.lemma = LemmaId::fracture_props;
  report.weight_free_reformulation = true;
  report.graphs_checked = 1;

  VertexSet y_attach = attachments(g, fr.Y);
  std::vector<VertexSet> anticomponents = components(g, fr.D, Side::complement);
  HWH_FOR_EACH_VERTEX(a, fr.A) {
    ++report.configs_checked;
    if ((y_attach & ~g.neighbours(a)) == 0) {
      report.violations.push_back(
          {LemmaId::fracture_props,
           g,
           {{"C", fr.C}, {"D", fr.D}, {"A", fr.A}, {"B", fr.B}, {"Y", fr.Y}, {"a", bit(a)}},
           "every attachment of Y is adjacent to a"});
    }
    for (VertexSet X : anticomponents) {
      ++report.configs_checked;
      if (is_mixed_on(g, a, X)) {
        report.violations.push_back(
            {LemmaId::fracture_props,
             g,
             {{"C", fr.C}, {"D", fr.D}, {"A", fr.A}, {"B", fr.B}, {"Y", fr.Y}, {"a", bit(a)},
              {"X", X}},
             "a mixed on an anticomponent of D"});
      }
    }
  }
  return report;
}

LemmaReport crossing_check(const Graph& g, const Fracture& fr1, const Fracture& fr2) {
  if ((fr1.Y & fr2.Y) == 0)
    throw PreconditionError("crossing_check: fulcrums do not intersect");
  LemmaReport report;
  report.lemma = LemmaId::crossing;
  report.weight_free_reformulation = true;
  report.graphs_checked = 1;
  bool same_fulcrum = fr1.Y == fr2.Y;
  for (VertexSet comp : components(g, fr1.A | fr2.A, Side::direct)) {
    ++report.configs_checked;
    bool inside = (comp & ~fr1.A) == 0 || (comp & ~fr2.A) == 0;
    if (!inside && !same_fulcrum) {
      report.violations.push_back({LemmaId::crossing,
                                   g,
                                   {{"A1", fr1.A}, {"C1", fr1.C}, {"D1", fr1.D}, {"Y1", fr1.Y},
                                    {"A2", fr2.A}, {"C2", fr2.C}, {"D2", fr2.D}, {"Y2", fr2.Y},
                                    {"component", comp}},
                                   "component splits across both small sides"});
    }
  }
  return report;
}

LemmaReport small_side_components(const Graph& g, const std::vector<Fracture>& fractures) {
  for (size_t i = 0; i < fractures.size(); ++i)
    for (size_t j = i + 1; j < fractures.size(); ++j)
      if ((fractures[i].Y & fractures[j].Y) == 0)
        throw PreconditionError("small_side_components: fulcrums must pairwise intersect");

  LemmaReport report;
  report.lemma = LemmaId::small_side;
  report.weight_free_reformulation = true;
  report.graphs_checked = 1;
  VertexSet small_union = 0;
  for (const Fracture& fr : fractures) small_union |= fr.A;
  for (VertexSet comp : components(g, small_union, Side::direct)) {
    ++report.configs_checked;
    bool certified = false;
    for (const Fracture& fr : fractures) {
      if (is_anticomplete_between(g, comp, fr.Y)) {
        certified = true;
        break;
      }
    }
    if (!certified) {
      Violation v{LemmaId::small_side, g, {{"component", comp}}, "no fulcrum anticomplete"};
      for (size_t i = 0; i < fractures.size(); ++i) {
        v.sets.push_back({"A" + std::to_string(i + 1), fractures[i].A});
        v.sets.push_back({"Y" + std::to_string(i + 1), fractures[i].Y});
      }
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

bool is_homogeneous(const Graph& g, VertexSet X, VertexSet universe) {
  HWH_FOR_EACH_VERTEX(v, universe & ~X) {
    if (is_mixed_on(g, v, X)) return false;
  }
  return true;
}

VertexSet homogeneous_closure(const Graph& g, VertexSet S, VertexSet universe) {
  VertexSet X = S & universe;
  bool grew = true;
  while (grew) {
    grew = false;
    HWH_FOR_EACH_VERTEX(v, universe & ~X) {
      if (is_mixed_on(g, v, X)) {
        X |= bit(v);
        grew = true;
      }
    }
  }
  return X;
}

HomogeneousPartition homogeneous_partition(const Graph& g, VertexSet Z) {
  int k = set_size(Z);
  if (k <= 1) throw PreconditionError("homogeneous_partition: |Z| must exceed 1");
  if (k > 22) throw PreconditionError("homogeneous_partition: Z larger than 22 vertices");
  if (!is_connected(g, Z)) throw PreconditionError("homogeneous_partition: g[Z] disconnected");
  if (!is_anticonnected(g, Z))
    throw PreconditionError("homogeneous_partition: g[Z] not anticonnected");

  std::vector<int> vs = set_members(Z);
  std::vector<VertexSet> homog;  // proper nonempty homogeneous subsets
  for (VertexSet lm = 1; lm < (VertexSet(1) << k) - 1; ++lm) {
    VertexSet X = 0;
    HWH_FOR_EACH_VERTEX(i, lm) X |= bit(vs[i]);
    if (is_homogeneous(g, X, Z)) homog.push_back(X);
  }
  HomogeneousPartition out;
  for (VertexSet X : homog) {
    bool maximal = true;
    for (VertexSet W : homog) {
      if (W != X && (X & ~W) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.parts.push_back(X);
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](VertexSet a, VertexSet b) { return lowest_vertex(a) < lowest_vertex(b); });

  VertexSet seen = 0;
  for (VertexSet part : out.parts) {
    if ((part & seen) != 0)
      throw InternalInconsistency("homogeneous_partition: parts overlap on " +
                                  set_to_string(part & seen));
    seen |= part;
  }
  if (seen != Z) throw InternalInconsistency("homogeneous_partition: parts do not cover Z");
  if (out.parts.size() <= 1)
    throw InternalInconsistency("homogeneous_partition: single part despite the preconditions");
  return out;
}

GuardednessResult is_guarded(const Graph& g) {
  for (const Forcer& f : all_forcers(g)) {
    bool covered = homogeneous_closure(g, f.path1_set(), g.vertices()) != g.vertices() ||
                   homogeneous_closure(g, f.path2_set(), g.vertices()) != g.vertices();
    if (!covered) return {false, f};
  }
  return {true, std::nullopt};
}

}  // namespace hwh
