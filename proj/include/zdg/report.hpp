#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/oracles.hpp"
#include "zdg/planarity.hpp"

namespace zdg {

/// Computed properties of one loop-free graph. Witness cycles are verifiably
/// induced in the source graph (antihole witnesses in its complement).
struct PropertyReport {
  std::size_t vertices = 0;
  std::size_t edge_total = 0;
  bool complete = false;
  bool regular = false;
  bool connected = false;
  bool eulerian = false;
  std::optional<int> chromatic_number;  // engaged for loop-free graphs
  std::optional<std::vector<std::vector<Label>>> complete_multipartite;
  std::optional<int> girth;     // nullopt = inf
  std::optional<int> diameter;  // nullopt = inf
  int clique_number = 0;
  int independence_number = 0;
  int domination_number = 0;
  u64 min_dominating_count = 0;
  int vertex_cover_number = 0;
  bool chordal = false;
  std::vector<Label> chordal_witness;
  bool planar = false;
  bool perfect = false;
  std::string perfect_witness_kind;
  std::vector<Label> perfect_witness;
  std::vector<Label> simplicial;
};

constexpr std::size_t kDefaultConstructionCap = 5000;
constexpr std::size_t kDefaultOracleCap = 300;

inline PropertyReport property_report(const LabeledGraph& g, const SearchBudget& budget = {},
                                      std::size_t oracle_cap = kDefaultOracleCap) {
  g.require_loop_free("property_report");
  if (g.vertex_count() > oracle_cap) {
    throw ResourceLimitError("property_report: " + std::to_string(g.vertex_count()) +
                             " vertices exceed the exact-oracle cap " +
                             std::to_string(oracle_cap));
  }
  PropertyReport r;
  r.vertices = g.vertex_count();
  r.edge_total = g.edge_count();
  const auto basics = basic_invariants(g);
  r.complete = basics.complete;
  r.regular = basics.regular;
  r.connected = basics.connected;
  r.eulerian = basics.eulerian;
  const auto metrics = metric_invariants(g);
  r.girth = metrics.girth;
  r.diameter = metrics.diameter;
  r.chromatic_number = chromatic_number(g, budget);
  r.complete_multipartite = complete_multipartite_partition(g);
  r.clique_number = clique_number(g, budget);
  r.independence_number = independence_number(g, budget);
  const auto dom = domination_stats(g, budget);
  r.domination_number = dom.gamma;
  r.min_dominating_count = dom.min_count;
  r.vertex_cover_number = static_cast<int>(g.vertex_count()) - r.independence_number;
  const auto chord = is_chordal(g);
  r.chordal = chord.chordal;
  r.chordal_witness = chord.witness;
  r.planar = is_planar(g);
  const auto perf = is_perfect(g, budget);
  r.perfect = perf.perfect;
  r.perfect_witness_kind = perf.witness_kind;
  r.perfect_witness = perf.witness;
  r.simplicial = simplicial_vertices(g);
  return r;
}

}  // namespace zdg
