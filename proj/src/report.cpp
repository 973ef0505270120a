#include "hwh/report.hpp"

#include <json.hpp>

#include <sstream>

#include "hwh/io.hpp"

namespace hwh {

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::wiggly1: return "wiggly1";
    case LemmaId::wiggly2: return "wiggly2";
    case LemmaId::wiggly3: return "wiggly3";
    case LemmaId::wiggly4: return "wiggly4";
    case LemmaId::wiggly5: return "wiggly5";
    case LemmaId::fracture_props: return "fracture_props";
    case LemmaId::crossing: return "crossing";
    case LemmaId::small_side: return "small_side";
    case LemmaId::homog_partition: return "homog_partition";
    case LemmaId::bigcomp: return "bigcomp";
    case LemmaId::smalldeg: return "smalldeg";
    case LemmaId::strong_eh: return "strongEH";
    case LemmaId::homog_bound: return "homog_bound";
  }
  return "?";
}

LemmaId lemma_from_name(const std::string& name) {
  for (int i = 0; i <= int(LemmaId::homog_bound); ++i) {
    if (name == lemma_name(LemmaId(i))) return LemmaId(i);
  }
  throw PreconditionError("unknown lemma id '" + name + "'");
}

VertexSet Violation::find_set(const std::string& name) const {
  for (const auto& [key, mask] : sets)
    if (key == name) return mask;
  throw PreconditionError("violation has no set named '" + name + "'");
}

void LemmaReport::merge(LemmaReport&& other) {
  graphs_checked += other.graphs_checked;
  configs_checked += other.configs_checked;
  for (auto& v : other.violations) violations.push_back(std::move(v));
  weight_free_reformulation = weight_free_reformulation || other.weight_free_reformulation;
  for (auto& n : other.notes) notes.push_back(std::move(n));
  runtime_seconds += other.runtime_seconds;
}

std::string violation_line(const Violation& v) {
  std::ostringstream out;
  out << lemma_name(v.lemma) << " " << to_graph6(v.graph);
  for (const auto& [name, mask] : v.sets) {
    out << " " << name << "=0x" << std::hex << mask << std::dec;
  }
  if (!v.note.empty()) out << " # " << v.note;
  return out.str();
}

std::string report_text(const LemmaReport& r) {
  std::ostringstream out;
  for (const auto& v : r.violations) out << violation_line(v) << "\n";
  out << lemma_name(r.lemma) << ": graphs=" << r.graphs_checked
      << " configs=" << r.configs_checked << " violations=" << r.violations.size()
      << (r.ok() ? " verdict=pass" : " verdict=fail");
  if (r.weight_free_reformulation) out << " [weight-free reformulation]";
  out << "\n";
  return out.str();
}

std::string report_json(const LemmaReport& r) {
  nlohmann::json j;
  j["lemma"] = lemma_name(r.lemma);
  j["graphs_checked"] = r.graphs_checked;
  j["configs_checked"] = r.configs_checked;
  j["violation_count"] = r.violations.size();
  j["verdict"] = r.ok() ? "pass" : "fail";
  j["weight_free_reformulation"] = r.weight_free_reformulation;
  j["runtime_seconds"] = r.runtime_seconds;
  j["notes"] = r.notes;
  auto& arr = j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json jv;
    jv["graph6"] = to_graph6(v.graph);
    for (const auto& [name, mask] : v.sets) {
      std::ostringstream hexmask;
      hexmask << "0x" << std::hex << mask;
      jv["sets"][name] = hexmask.str();
    }
    if (!v.note.empty()) jv["note"] = v.note;
    arr.push_back(jv);
  }
  return j.dump(2);
}

}  // namespace hwh
