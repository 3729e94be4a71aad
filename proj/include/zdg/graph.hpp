#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zdg/numthy.hpp"

namespace zdg {

/// An exact search exceeded its configured node budget or vertex cap.
/// Distinguishable from every answer; never silently converted to one.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct SearchBudget {
  u64 max_nodes = 200'000'000;

  void charge(u64& used, const char* where) const {
    if (++used > max_nodes) {
      throw ResourceLimitError(std::string(where) + ": node budget exhausted");
    }
  }
};

/// Fixed-size bitset sized at construction; the adjacency-row workhorse.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i >> 6] |= u64{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(u64{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (u64 w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (u64 w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t find_first() const { return find_next_from(0); }
  std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

  /// Calls fn(i) for every set bit, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      u64 bits = words_[w];
      while (bits) {
        fn((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend bool operator<(const Bitset& a, const Bitset& b) { return a.words_ < b.words_; }

 private:
  std::size_t find_next_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t w = i >> 6;
    u64 bits = words_[w] & (~u64{0} << (i & 63));
    while (true) {
      if (bits) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w == words_.size()) return npos;
      bits = words_[w];
    }
  }

  std::size_t size_ = 0;
  std::vector<u64> words_;
};

/// Opaque vertex label: a single integer or an integer tuple, rendered as
/// decimal text ("12") or comma-joined text ("1,0,3"). Ordering is numeric,
/// componentwise.
struct Label {
  std::vector<u64> parts;

  Label() = default;
  Label(u64 v) : parts{v} {}  // NOLINT: implicit by design for scalar labels
  explicit Label(std::vector<u64> p) : parts(std::move(p)) {}

  bool scalar() const { return parts.size() == 1; }
  u64 value() const { return parts.at(0); }

  std::string text() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s;
  }

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Finite simple undirected graph over ordered opaque labels, with an
/// optional self-loop set (nonempty only for strong type graphs).
/// Immutable by convention once built; vertex iteration is label-ascending.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  explicit LabeledGraph(std::vector<Label> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
      throw std::invalid_argument("LabeledGraph: duplicate labels");
    }
    adj_.assign(labels_.size(), Bitset(labels_.size()));
    loops_ = Bitset(labels_.size());
  }

  std::size_t vertex_count() const { return labels_.size(); }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<std::size_t> index_of(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  void add_edge(std::size_t i, std::size_t j) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("add_edge: use add_loop for self-edges");
    if (!adj_[i].test(j)) {
      adj_[i].set(j);
      adj_[j].set(i);
      ++edge_count_;
    }
  }
  void add_loop(std::size_t i) {
    check_index(i);
    loops_.set(i);
  }

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  bool has_loop(std::size_t i) const { return loops_.test(i); }
  bool has_loops() const { return loops_.any(); }
  std::size_t loop_count() const { return loops_.count(); }
  std::size_t degree(std::size_t i) const { return adj_[i].count(); }
  std::size_t edge_count() const { return edge_count_; }
  const Bitset& neighbors(std::size_t i) const { return adj_[i]; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertex_count(); ++i) {
      for (std::size_t j = adj_[i].find_next(i); j != Bitset::npos; j = adj_[i].find_next(j)) {
        out.emplace_back(i, j);
      }
    }
    return out;
  }
  std::vector<std::size_t> loops() const { return loops_.to_indices(); }

  LabeledGraph complement() const {
    require_loop_free("complement");
    LabeledGraph c(labels_);
    for (std::size_t i = 0; i < vertex_count(); ++i) {
      for (std::size_t j = i + 1; j < vertex_count(); ++j) {
        if (!adjacent(i, j)) c.add_edge(i, j);
      }
    }
    return c;
  }

  /// Subgraph induced by the given vertex indices (loops carried over).
  LabeledGraph induced(const std::vector<std::size_t>& verts) const {
    std::vector<Label> labs;
    labs.reserve(verts.size());
    for (std::size_t v : verts) labs.push_back(label(v));
    LabeledGraph h(std::move(labs));
    std::vector<std::size_t> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a) {
      if (loops_.test(sorted[a])) h.add_loop(a);
      for (std::size_t b = a + 1; b < sorted.size(); ++b) {
        if (adjacent(sorted[a], sorted[b])) h.add_edge(a, b);
      }
    }
    return h;
  }

  void require_loop_free(const char* op) const {
    if (has_loops()) {
      throw std::invalid_argument(std::string(op) + ": undefined for graphs with self-loops");
    }
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= labels_.size()) throw std::out_of_range("LabeledGraph: vertex index out of range");
  }

  std::vector<Label> labels_;
  std::vector<Bitset> adj_;
  Bitset loops_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Cheap (polynomial-time) invariants.
// ---------------------------------------------------------------------------

struct BasicInvariants {
  bool complete = false;
  bool regular = false;
  bool connected = false;
  bool eulerian = false;
  std::vector<std::size_t> degree_sequence;  // vertex order, not sorted
};

namespace detail {

inline std::vector<int> component_ids(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      g.neighbors(v).for_each([&](std::size_t w) {
        if (comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      });
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

/// K1 and the empty graph count as complete; eulerian requires at least one
/// edge, all-even degrees and all non-isolated vertices in one component.
inline BasicInvariants basic_invariants(const LabeledGraph& g) {
  g.require_loop_free("basic_invariants");
  const std::size_t n = g.vertex_count();
  BasicInvariants out;
  out.degree_sequence.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.degree_sequence[i] = g.degree(i);

  out.complete = g.edge_count() == n * (n - (n ? 1 : 0)) / 2;
  out.regular = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (out.degree_sequence[i] != out.degree_sequence[0]) {
      out.regular = false;
      break;
    }
  }

  const auto comp = detail::component_ids(g);
  out.connected = true;
  for (int c : comp) {
    if (c != 0) {
      out.connected = false;
      break;
    }
  }

  out.eulerian = g.edge_count() >= 1;
  int edge_component = -1;
  for (std::size_t i = 0; i < n && out.eulerian; ++i) {
    if (out.degree_sequence[i] == 0) continue;
    if (out.degree_sequence[i] % 2 != 0) out.eulerian = false;
    if (edge_component < 0) edge_component = comp[i];
    if (comp[i] != edge_component) out.eulerian = false;
  }
  return out;
}

/// Girth and diameter; nullopt encodes infinity (forest / disconnected).
struct MetricInvariants {
  std::optional<int> girth;
  std::optional<int> diameter;
};

inline MetricInvariants metric_invariants(const LabeledGraph& g) {
  g.require_loop_free("metric_invariants");
  const std::size_t n = g.vertex_count();

  int best_cycle = -1;
  int diameter = 0;
  bool disconnected = false;
  std::vector<int> dist(n), parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      diameter = std::max(diameter, dist[v]);
      bool prune = best_cycle >= 0 && 2 * dist[v] >= best_cycle;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = static_cast<int>(v);
          queue.push_back(w);
          ++reached;
        } else if (!prune && static_cast<int>(w) != parent[v] && dist[w] >= dist[v]) {
          // Non-tree BFS edge: closed walk through s of length
          // dist[v] + dist[w] + 1, which bounds a cycle of that length.
          const int len = dist[v] + dist[w] + 1;
          if (best_cycle < 0 || len < best_cycle) best_cycle = len;
        }
      });
    }
    if (reached < n) disconnected = true;
  }

  MetricInvariants out;
  if (best_cycle >= 0) out.girth = best_cycle;
  if (!disconnected) out.diameter = diameter;
  return out;
}

/// Partition into independent sets with every cross pair adjacent, or nullopt.
/// Groups sorted by smallest member label, members ascending.
inline std::optional<std::vector<std::vector<Label>>> complete_multipartite_partition(
    const LabeledGraph& g) {
  g.require_loop_free("complete_multipartite_partition");
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::vector<std::vector<Label>>{};
  // Parts must be the connected components of the complement, and each such
  // component must induce no edges of g.
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && !g.adjacent(v, w) && comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<Label>> parts(next);
  std::vector<std::vector<std::size_t>> part_indices(next);
  for (std::size_t v = 0; v < n; ++v) {
    parts[comp[v]].push_back(g.label(v));
    part_indices[comp[v]].push_back(v);
  }
  for (const auto& indices : part_indices) {
    for (std::size_t a = 0; a < indices.size(); ++a) {
      for (std::size_t b = a + 1; b < indices.size(); ++b) {
        if (g.adjacent(indices[a], indices[b])) return std::nullopt;
      }
    }
  }
  // Labels are stored ascending, so each part and the part list are already
  // ordered by smallest label.
  return parts;
}

/// Vertices whose open neighborhood induces a clique; isolated vertices count.
inline std::vector<Label> simplicial_vertices(const LabeledGraph& g) {
  g.require_loop_free("simplicial_vertices");
  std::vector<Label> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool simplicial = true;
    const Bitset& nv = g.neighbors(v);
    for (std::size_t u = nv.find_first(); u != Bitset::npos && simplicial; u = nv.find_next(u)) {
      Bitset rest = nv;
      rest.reset(u);
      if (!rest.is_subset_of(g.neighbors(u))) simplicial = false;
    }
    if (simplicial) out.push_back(g.label(v));
  }
  return out;
}

/// BFS 2-coloring.
inline bool is_bipartite(const LabeledGraph& g) {
  if (g.has_loops()) return false;
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

inline std::string render_or_inf(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("inf");
}

}  // namespace zdg
