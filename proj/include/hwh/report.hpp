#ifndef HWH_REPORT_HPP
#define HWH_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "hwh/graph.hpp"

namespace hwh {

enum class LemmaId {
  wiggly1,
  wiggly2,
  wiggly3,
  wiggly4,
  wiggly5,
  fracture_props,
  crossing,
  small_side,
  homog_partition,
  bigcomp,
  smalldeg,
  strong_eh,
  homog_bound,
};

const char* lemma_name(LemmaId id);
LemmaId lemma_from_name(const std::string& name);

// One failing configuration, replayable: the named masks identify the
// configuration on `graph` exactly.
struct Violation {
  LemmaId lemma;
  Graph graph;
  std::vector<std::pair<std::string, VertexSet>> sets;
  std::string note;

  VertexSet find_set(const std::string& name) const;
};

struct LemmaReport {
  LemmaId lemma;
  long graphs_checked = 0;
  long configs_checked = 0;
  std::vector<Violation> violations;
  bool weight_free_reformulation = false;
  std::vector<std::string> notes;
  double runtime_seconds = 0;

  bool ok() const { return violations.empty(); }
  void merge(LemmaReport&& other);
};

// "<lemma> <graph6> name=0x... name=0x... [# note]"
std::string violation_line(const Violation& v);
std::string report_text(const LemmaReport& r);
std::string report_json(const LemmaReport& r);

}  // namespace hwh

#endif
