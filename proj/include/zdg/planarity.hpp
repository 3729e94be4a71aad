#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "zdg/graph.hpp"

namespace zdg {

/// Exact planarity (Boyer-Myrvold).
inline bool is_planar(const LabeledGraph& g) {
  g.require_loop_free("is_planar");
  const std::size_t n = g.vertex_count();
  if (n < 5) return true;
  if (g.edge_count() > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace zdg
