#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/numthy.hpp"

namespace zdg {

constexpr std::size_t kConstructionCap = 5000;

/// Zero-divisor graph of Z_n: vertices are the x with 0 < x < n and
/// gcd(x, n) > 1, adjacent when x * y = 0 mod n.
struct RingGraphSpec {
  u64 n = 0;
  LabeledGraph graph;
};

inline u64 ring_vertex_count(u64 n) { return n - euler_phi(n) - 1; }

inline RingGraphSpec build_ring_graph(u64 n, std::size_t vertex_cap = kConstructionCap) {
  if (n < 2) throw std::invalid_argument("build_ring_graph: n must be >= 2");
  const u64 count = ring_vertex_count(n);
  if (count > vertex_cap) {
    throw ResourceLimitError("build_ring_graph: " + std::to_string(count) +
                             " vertices exceed cap " + std::to_string(vertex_cap));
  }
  std::vector<Label> labels;
  labels.reserve(count);
  for (u64 x = 1; x < n; ++x) {
    if (std::gcd(x, n) > 1) labels.emplace_back(x);
  }
  LabeledGraph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (mul_mod(labels[i].value(), labels[j].value(), n) == 0) g.add_edge(i, j);
    }
  }
  return {n, std::move(g)};
}

/// Type class T_a = { x in ZD(Z_n) : gcd(x, n) = a }; |T_a| = phi(n/a).
struct TypeClassInfo {
  std::vector<u64> members;
  u64 size = 0;
};

inline TypeClassInfo type_class_info(u64 n, u64 a) {
  if (a <= 1 || a >= n || n % a != 0) {
    throw std::invalid_argument("type_class_info: a must be a proper nontrivial divisor of n");
  }
  TypeClassInfo info;
  info.size = euler_phi(n / a);
  for (u64 x = a; x < n; x += a) {
    if (std::gcd(x, n) == a) info.members.push_back(x);
  }
  return info;
}

/// Quotient graph on the proper nontrivial divisors of n; edge a-b when
/// a * b = 0 mod n. The strong variant adds a loop on every class whose
/// label squares to zero.
inline LabeledGraph build_type_graph(u64 n, bool strong) {
  if (n < 2) throw std::invalid_argument("build_type_graph: n must be >= 2");
  std::vector<Label> labels;
  for (u64 d : divisors(n)) {
    if (d > 1 && d < n) labels.emplace_back(d);
  }
  LabeledGraph g(labels);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (strong && mul_mod(labels[i].value(), labels[i].value(), n) == 0) g.add_loop(i);
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (mul_mod(labels[i].value(), labels[j].value(), n) == 0) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace zdg
