#ifndef HWH_HARNESS_HPP
#define HWH_HARNESS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hwh/coherence.hpp"
#include "hwh/decomposition.hpp"
#include "hwh/graph.hpp"
#include "hwh/report.hpp"

namespace hwh {

namespace filter {
constexpr unsigned connected = 1u << 0;
constexpr unsigned hwh_free = 1u << 1;
constexpr unsigned forcer_free = 1u << 2;
constexpr unsigned house_free = 1u << 3;
constexpr unsigned perfect = 1u << 4;
}  // namespace filter

unsigned parse_filters(const std::string& comma_list);  // e.g. "hwh-free,connected"
bool passes_filters(const Graph& g, unsigned filters);

struct EnumSpec {
  int n = 0;
  unsigned filters = 0;
  bool canonical = true;
};

// Upper-triangle bits of the canonical labelling, column by column; total
// order (n, bits) gives the canonical-form order.
struct CanonKey {
  int n = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonKey&) const = default;
};

CanonKey canonical_key(const Graph& g);
Graph graph_from_key(const CanonKey& key);
Graph canonical_form(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // perm[old] = new

// Canonical mode: one graph per isomorphism class, canonical-form order,
// n <= 10. Labelled mode: every adjacency matrix, n <= 6.
void enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(const EnumSpec& spec);

// All Y-splits closed under single-vertex augmentation (what
// optimalize_split produces), as fractures. `require_y_attachments` demands
// attachments(Y) nonempty — the fracture-properties regime.
std::vector<Fracture> enumerate_maximal_y_fractures(const Graph& g, bool require_y_attachments);

LemmaReport verify_lemma_on_graph(LemmaId id, const Graph& g);
LemmaReport verify_lemma(LemmaId id, const EnumSpec& spec, int jobs = 1);

// Re-runs one recorded violation; true when the configuration still violates.
bool replay_violation(const Violation& v);

struct EhStats {
  int n = 0;
  long classes = 0;
  int min_value = 0;
  Graph argmin;
  double exponent = 0;
};

EhStats eh_statistics(int n, unsigned filters);

enum class SubstKind { clique, stable };

struct InstanceSearchSpec {
  enum class Builder { substitution, random_filtered } builder = Builder::substitution;
  Graph base;                                          // substitution template
  std::vector<std::pair<int, SubstKind>> parts;        // one entry per base vertex
  Rational eps = Rational(1, 6);
  std::uint64_t seed = 0;
  int random_n = 0;                                    // random-filtered mode
  Rational random_density = Rational(1, 2);
  long random_attempts = 0;
};

struct FoundInstance {
  Graph g;
  WeightMap w;
  Rational eps;
};

// Every emitted instance has passed exact hole-with-hat-freeness and
// eps-coherence; an empty result is data, not an error.
std::vector<FoundInstance> search_instances(const InstanceSearchSpec& spec);

}  // namespace hwh

#endif
