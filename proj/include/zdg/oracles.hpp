#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

// ---------------------------------------------------------------------------
// Exact, possibly exponential-time searches. Desk-scale ground truth: every
// routine here is exhaustive, deterministic (label-ascending iteration,
// lexicographically first witnesses) and budget-guarded.
// ---------------------------------------------------------------------------

/// Collapses classes of vertices with identical open neighborhoods (such
/// vertices are pairwise non-adjacent) down to their smallest-label member.
/// Preserves chromatic number and all chordless cycles of length >= 5.
inline LabeledGraph collapse_nonadjacent_twins(const LabeledGraph& g) {
  g.require_loop_free("collapse_nonadjacent_twins");
  std::map<Bitset, std::size_t> seen;
  std::vector<std::size_t> reps;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (seen.emplace(g.neighbors(v), v).second) reps.push_back(v);
  }
  if (reps.size() == g.vertex_count()) return g;
  return g.induced(reps);
}

namespace detail {

inline Bitset full_set(std::size_t n) {
  Bitset b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i);
  return b;
}

// Branch-and-bound maximum clique with greedy-coloring bounds.
class CliqueSolver {
 public:
  CliqueSolver(const LabeledGraph& g, const SearchBudget& budget)
      : g_(g), budget_(budget) {}

  int solve(Bitset cand, int base) {
    best_ = base;
    expand(std::move(cand), base);
    return best_;
  }

 private:
  void expand(Bitset cand, int size) {
    budget_.charge(nodes_, "clique search");
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy coloring of the candidates; color id bounds the clique extension.
    std::vector<std::pair<std::size_t, int>> colored;
    Bitset uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset avail = uncolored;
      while (avail.any()) {
        std::size_t v = avail.find_first();
        colored.emplace_back(v, color);
        uncolored.reset(v);
        avail.reset(v);
        avail.subtract(g_.neighbors(v));
      }
    }
    for (std::size_t i = colored.size(); i-- > 0;) {
      auto [v, c] = colored[i];
      if (size + c <= best_) return;
      Bitset next = cand & g_.neighbors(v);
      expand(std::move(next), size + 1);
      cand.reset(v);
    }
  }

  const LabeledGraph& g_;
  const SearchBudget& budget_;
  u64 nodes_ = 0;
  int best_ = 0;
};

}  // namespace detail

/// Exact maximum clique size.
inline int clique_number(const LabeledGraph& g, const SearchBudget& budget = {}) {
  g.require_loop_free("clique_number");
  if (g.vertex_count() == 0) return 0;
  detail::CliqueSolver solver(g, budget);
  return solver.solve(detail::full_set(g.vertex_count()), 0);
}

/// Exact maximum clique size among cliques containing the anchor vertex.
inline int clique_number_anchored(const LabeledGraph& g, const Label& anchor,
                                  const SearchBudget& budget = {}) {
  g.require_loop_free("clique_number_anchored");
  const auto idx = g.index_of(anchor);
  if (!idx) throw std::invalid_argument("clique_number_anchored: unknown anchor label " + anchor.text());
  detail::CliqueSolver solver(g, budget);
  return 1 + solver.solve(g.neighbors(*idx), 0);
}

/// Exact counts of vertex subsets of each size 1..max_size that are cliques.
inline std::map<int, u64> clique_census(const LabeledGraph& g, int max_size,
                                        const SearchBudget& budget = {}) {
  g.require_loop_free("clique_census");
  if (max_size < 1 || static_cast<std::size_t>(max_size) > g.vertex_count()) {
    throw std::invalid_argument("clique_census: max_size must be in [1, vertex count]");
  }
  std::map<int, u64> counts;
  for (int s = 1; s <= max_size; ++s) counts[s] = 0;
  u64 nodes = 0;
  std::function<void(std::size_t, int, const Bitset&)> grow =
      [&](std::size_t last, int size, const Bitset& cand) {
        budget.charge(nodes, "clique_census");
        ++counts[size];
        if (size == max_size) return;
        for (std::size_t v = cand.find_next(last); v != Bitset::npos; v = cand.find_next(v)) {
          grow(v, size + 1, cand & g.neighbors(v));
        }
      };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) grow(v, 1, g.neighbors(v));
  return counts;
}

/// Exact maximum independent set size (clique number of the complement).
inline int independence_number(const LabeledGraph& g, const SearchBudget& budget = {}) {
  g.require_loop_free("independence_number");
  return clique_number(g.complement(), budget);
}

/// Exact minimum vertex cover size; complements the independence number.
inline int vertex_cover_number(const LabeledGraph& g, const SearchBudget& budget = {}) {
  g.require_loop_free("vertex_cover_number");
  return static_cast<int>(g.vertex_count()) - independence_number(g, budget);
}

struct DominationStats {
  int gamma = 0;
  u64 min_count = 0;
};

/// Exact domination number plus the number of dominating sets of that size,
/// by pruned exhaustive enumeration of fixed-size subsets.
inline DominationStats domination_stats(const LabeledGraph& g, const SearchBudget& budget = {}) {
  g.require_loop_free("domination_stats");
  const std::size_t n = g.vertex_count();
  if (n == 0) return {0, 1};

  std::vector<Bitset> closed(n);
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = g.neighbors(v);
    closed[v].set(v);
  }
  const Bitset full = detail::full_set(n);
  // suffix[i] = union of closed neighborhoods over vertices >= i.
  std::vector<Bitset> suffix(n + 1, Bitset(n));
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | closed[i];

  u64 nodes = 0;
  u64 count = 0;
  bool stop_at_first = false;
  bool found = false;
  std::function<void(std::size_t, int, const Bitset&)> enumerate =
      [&](std::size_t start, int remaining, const Bitset& covered) {
        if (found && stop_at_first) return;
        budget.charge(nodes, "domination_stats");
        if (remaining == 0) {
          if (covered == full) {
            ++count;
            found = true;
          }
          return;
        }
        if (!full.is_subset_of(covered | suffix[start])) return;  // cannot finish
        for (std::size_t v = start; v + remaining <= n; ++v) {
          enumerate(v + 1, remaining - 1, covered | closed[v]);
          if (found && stop_at_first) return;
        }
      };

  int gamma = 0;
  for (int s = 0; static_cast<std::size_t>(s) <= n; ++s) {
    found = false;
    stop_at_first = true;
    enumerate(0, s, Bitset(n));
    if (found) {
      gamma = s;
      break;
    }
  }
  count = 0;
  found = false;
  stop_at_first = false;
  enumerate(0, gamma, Bitset(n));
  return {gamma, count};
}

// ---------------------------------------------------------------------------
// Exact coloring.
// ---------------------------------------------------------------------------

namespace detail {

inline bool k_colorable_core(const LabeledGraph& g, int k, const SearchBudget& budget) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> color(n, 0);
  u64 nodes = 0;
  std::function<bool(std::size_t)> assign = [&](std::size_t placed) -> bool {
    budget.charge(nodes, "coloring search");
    if (placed == n) return true;
    // DSATUR choice: max distinct neighbor colors, then max degree, then index.
    std::size_t pick = Bitset::npos;
    int pick_sat = -1;
    std::size_t pick_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      Bitset seen_mask(static_cast<std::size_t>(k) + 1);
      int sat = 0;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (color[w] != 0 && !seen_mask.test(color[w])) {
          seen_mask.set(color[w]);
          ++sat;
        }
      });
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = g.degree(v);
      }
    }
    int max_used = 0;
    for (std::size_t v = 0; v < n; ++v) max_used = std::max(max_used, color[v]);
    for (int c = 1; c <= std::min(k, max_used + 1); ++c) {
      bool clash = false;
      g.neighbors(pick).for_each([&](std::size_t w) { clash = clash || color[w] == c; });
      if (clash) continue;
      color[pick] = c;
      if (assign(placed + 1)) return true;
      color[pick] = 0;
    }
    return false;
  };
  return assign(0);
}

}  // namespace detail

/// Proper k-colorability; a self-loop makes every k fail.
inline bool is_k_colorable(const LabeledGraph& g, int k, const SearchBudget& budget = {}) {
  if (g.has_loops()) return false;
  return detail::k_colorable_core(collapse_nonadjacent_twins(g), k, budget);
}

/// Exact chromatic number; nullopt ("undefined") for graphs with self-loops.
inline std::optional<int> chromatic_number(const LabeledGraph& g, const SearchBudget& budget = {}) {
  if (g.has_loops()) return std::nullopt;
  const LabeledGraph h = collapse_nonadjacent_twins(g);
  if (h.vertex_count() == 0) return 0;
  for (int k = clique_number(h, budget);; ++k) {
    if (detail::k_colorable_core(h, k, budget)) return k;
  }
}

// ---------------------------------------------------------------------------
// Chordality via LexBFS + perfect elimination check.
// ---------------------------------------------------------------------------

struct ChordalityResult {
  bool chordal = true;
  std::vector<Label> witness;  // chordless cycle of length >= 4 when !chordal
};

namespace detail {

inline std::vector<std::size_t> lexbfs_order(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> lex_label(n);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = Bitset::npos;
    for (std::size_t v = 0; v < n; ++v) {
      if (!visited[v] && (pick == Bitset::npos || lex_label[v] > lex_label[pick])) pick = v;
    }
    visited[pick] = true;
    order.push_back(pick);
    g.neighbors(pick).for_each([&](std::size_t w) {
      if (!visited[w]) lex_label[w].push_back(n - step);
    });
  }
  return order;
}

// Some chordless cycle of length >= 4; exists exactly when g is not chordal.
// For each vertex v and non-adjacent pair x, y of its neighbors, a shortest
// x..y path avoiding N[v] closes into a chordless cycle through v.
inline std::optional<std::vector<Label>> find_chordless_cycle_ge4(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    const auto nv = g.neighbors(v).to_indices();
    for (std::size_t a = 0; a < nv.size(); ++a) {
      for (std::size_t b = a + 1; b < nv.size(); ++b) {
        const std::size_t x = nv[a], y = nv[b];
        if (g.adjacent(x, y)) continue;
        Bitset allowed = detail::full_set(n);
        allowed.subtract(g.neighbors(v));
        allowed.reset(v);
        allowed.set(x);
        allowed.set(y);
        std::vector<int> prev(n, -2);
        std::deque<std::size_t> queue{x};
        prev[x] = -1;
        while (!queue.empty() && prev[y] == -2) {
          std::size_t cur = queue.front();
          queue.pop_front();
          g.neighbors(cur).for_each([&](std::size_t w) {
            if (allowed.test(w) && prev[w] == -2) {
              prev[w] = static_cast<int>(cur);
              queue.push_back(w);
            }
          });
        }
        if (prev[y] == -2) continue;
        std::vector<std::size_t> path;
        for (int cur = static_cast<int>(y); cur != -1; cur = prev[cur]) {
          path.push_back(static_cast<std::size_t>(cur));
        }
        std::vector<Label> cycle{g.label(v)};
        for (auto it = path.rbegin(); it != path.rend(); ++it) cycle.push_back(g.label(*it));
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline ChordalityResult is_chordal(const LabeledGraph& g) {
  g.require_loop_free("is_chordal");
  const std::size_t n = g.vertex_count();
  const auto sigma = detail::lexbfs_order(g);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[sigma[i]] = i;
  // Reverse of a LexBFS order is a perfect elimination ordering iff chordal.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t parent = Bitset::npos;
    g.neighbors(v).for_each([&](std::size_t w) {
      if (pos[w] < pos[v] && (parent == Bitset::npos || pos[w] > pos[parent])) parent = w;
    });
    if (parent == Bitset::npos) continue;
    bool ok = true;
    g.neighbors(v).for_each([&](std::size_t w) {
      if (w != parent && pos[w] < pos[v] && !g.adjacent(w, parent)) ok = false;
    });
    if (!ok) {
      auto witness = detail::find_chordless_cycle_ge4(g);
      if (!witness) throw std::logic_error("is_chordal: elimination check failed without witness");
      return {false, *witness};
    }
  }
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Holes, antiholes, perfection.
// ---------------------------------------------------------------------------

enum class CycleParity { any, odd, even };

/// Exhaustive induced-cycle DFS: first (in deterministic vertex order)
/// chordless cycle with length in [min_len, max_len] and the given parity.
/// min_len must be >= 4; for min_len >= 5 the search runs on the
/// twin-collapsed graph (holes of length >= 5 never contain twins).
inline std::optional<std::vector<Label>> find_induced_cycle(const LabeledGraph& g0, int min_len,
                                                            int max_len, CycleParity parity,
                                                            const SearchBudget& budget = {}) {
  g0.require_loop_free("find_induced_cycle");
  if (min_len < 4) throw std::invalid_argument("find_induced_cycle: min_len must be >= 4");
  const LabeledGraph g = min_len >= 5 ? collapse_nonadjacent_twins(g0) : g0;
  const std::size_t n = g.vertex_count();
  const auto parity_ok = [&](int len) {
    return parity == CycleParity::any || (parity == CycleParity::odd) == (len % 2 == 1);
  };

  u64 nodes = 0;
  std::vector<std::size_t> path;
  std::optional<std::vector<Label>> result;

  // path = s, p1, ..., pk; forbidden = N(p1) | ... | N(p_{k-1}); in_path set.
  std::function<void(Bitset&, Bitset&)> extend = [&](Bitset& forbidden, Bitset& in_path) {
    if (result) return;
    budget.charge(nodes, "find_induced_cycle");
    const std::size_t s = path.front();
    const std::size_t last = path.back();
    Bitset cand = g.neighbors(last);
    cand.subtract(forbidden);
    cand.subtract(in_path);
    for (std::size_t u = cand.find_next(s); u != Bitset::npos && !result; u = cand.find_next(u)) {
      const int closed_len = static_cast<int>(path.size()) + 1;
      if (g.adjacent(u, s)) {
        // u can only close the cycle: any longer use leaves the chord u-s.
        if (closed_len >= min_len && closed_len <= max_len && parity_ok(closed_len) &&
            path[1] < u) {
          std::vector<Label> cycle;
          for (std::size_t v : path) cycle.push_back(g.label(v));
          cycle.push_back(g.label(u));
          result = std::move(cycle);
        }
        continue;
      }
      if (closed_len >= max_len) continue;  // no room left to close
      path.push_back(u);
      in_path.set(u);
      forbidden |= g.neighbors(last);
      extend(forbidden, in_path);
      in_path.reset(u);
      path.pop_back();
      // Rebuild forbidden on unwind; cheaper than stacked copies at these sizes.
      forbidden = Bitset(n);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) forbidden |= g.neighbors(path[i]);
    }
  };

  for (std::size_t s = 0; s < n && !result; ++s) {
    const Bitset& ns = g.neighbors(s);
    for (std::size_t p1 = ns.find_next(s); p1 != Bitset::npos && !result; p1 = ns.find_next(p1)) {
      path = {s, p1};
      Bitset forbidden(n);
      Bitset in_path(n);
      in_path.set(s);
      in_path.set(p1);
      extend(forbidden, in_path);
    }
  }
  return result;
}

/// First induced odd cycle of length >= min_len (default: odd holes).
inline std::optional<std::vector<Label>> find_odd_hole(const LabeledGraph& g, int min_len = 5,
                                                       const SearchBudget& budget = {}) {
  return find_induced_cycle(g, min_len, static_cast<int>(g.vertex_count()), CycleParity::odd,
                            budget);
}

struct PerfectionResult {
  bool perfect = true;
  std::string witness_kind;     // "hole" or "antihole" when !perfect
  std::vector<Label> witness;   // odd chordless cycle (in g, resp. complement)
};

/// Strong perfect graph characterization: perfect iff neither the graph nor
/// its complement contains an odd hole of length >= 5.
inline PerfectionResult is_perfect(const LabeledGraph& g, const SearchBudget& budget = {}) {
  g.require_loop_free("is_perfect");
  if (auto hole = find_odd_hole(g, 5, budget)) return {false, "hole", *hole};
  if (auto antihole = find_odd_hole(g.complement(), 5, budget)) {
    return {false, "antihole", *antihole};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Isomorphism (small graphs; loops respected).
// ---------------------------------------------------------------------------

inline bool are_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                           const SearchBudget& budget = {}, std::size_t vertex_cap = 40) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count()) return false;
  if (n > vertex_cap) {
    throw ResourceLimitError("are_isomorphic: graph exceeds vertex cap " +
                             std::to_string(vertex_cap));
  }
  if (g1.edge_count() != g2.edge_count() || g1.loop_count() != g2.loop_count()) return false;

  auto invariant = [](const LabeledGraph& g, std::size_t v) {
    std::vector<std::size_t> nd;
    g.neighbors(v).for_each([&](std::size_t w) {
      nd.push_back(2 * g.degree(w) + (g.has_loop(w) ? 1 : 0));
    });
    std::sort(nd.begin(), nd.end());
    nd.insert(nd.begin(), {g.degree(v), g.has_loop(v) ? u64{1} : u64{0}});
    return nd;
  };
  std::map<std::vector<std::size_t>, int> classes;
  std::vector<int> class1(n), class2(n);
  std::map<int, int> count1, count2;
  for (std::size_t v = 0; v < n; ++v) {
    auto key = invariant(g1, v);
    class1[v] = classes.emplace(std::move(key), static_cast<int>(classes.size())).first->second;
    ++count1[class1[v]];
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto key = invariant(g2, v);
    auto it = classes.find(key);
    if (it == classes.end()) return false;
    class2[v] = it->second;
    ++count2[class2[v]];
  }
  if (count1 != count2) return false;

  // Order g1's vertices so each one touches as many already-mapped as possible.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = Bitset::npos;
    std::size_t pick_links = 0;
    std::size_t pick_rarity = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      g1.neighbors(v).for_each([&](std::size_t w) { links += placed[w] ? 1 : 0; });
      const std::size_t rarity = n - static_cast<std::size_t>(count1[class1[v]]);
      if (pick == Bitset::npos || links > pick_links ||
          (links == pick_links && rarity > pick_rarity)) {
        pick = v;
        pick_links = links;
        pick_rarity = rarity;
      }
    }
    placed[pick] = true;
    order.push_back(pick);
  }

  std::vector<int> map1to2(n, -1);
  std::vector<bool> used(n, false);
  u64 nodes = 0;
  std::function<bool(std::size_t)> match = [&](std::size_t i) -> bool {
    budget.charge(nodes, "are_isomorphic");
    if (i == n) return true;
    const std::size_t v = order[i];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || class2[w] != class1[v]) continue;
      bool ok = g1.has_loop(v) == g2.has_loop(w);
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = g1.adjacent(v, order[j]) ==
             g2.adjacent(w, static_cast<std::size_t>(map1to2[order[j]]));
      }
      if (!ok) continue;
      map1to2[v] = static_cast<int>(w);
      used[w] = true;
      if (match(i + 1)) return true;
      used[w] = false;
      map1to2[v] = -1;
    }
    return false;
  };
  return match(0);
}

}  // namespace zdg
