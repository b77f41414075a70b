#pragma once

// Brute-force reference computations for the test suites. None of these
// call into the flow, partition-search, packing or DP code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "regcyc/digraph.hpp"
#include "regcyc/rational.hpp"

namespace regcyc::oracle {

using Mask = std::uint32_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Mask> out_masks(const Digraph& d) {
  std::vector<Mask> out(d.n(), 0);
  for (auto [u, v] : d.arcs()) out[u] |= bit(v);
  return out;
}

/// Vertices reachable from `from` (inclusive) within `allowed`.
inline Mask reach(const std::vector<Mask>& out, Mask from, Mask allowed) {
  Mask seen = from & allowed;
  Mask frontier = seen;
  while (frontier) {
    int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask fresh = out[u] & allowed & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

/// Minimum |S| such that no vertex of W is reachable from U in D - S.
inline int min_separator_brute(const Digraph& d, const VertexSet& u, const VertexSet& w) {
  const int n = d.n();
  auto out = out_masks(d);
  const Mask all = n == 32 ? ~Mask{0} : bit(n) - 1;
  int best = n + 1;
  for (Mask s = 0; s <= all; ++s) {
    int size = std::popcount(s);
    if (size >= best) continue;
    Mask allowed = all & ~s;
    if ((reach(out, to_mask(u), allowed) & to_mask(w)) == 0) best = size;
    if (s == all) break;
  }
  return best;
}

/// Every simple cycle through `hub`, as the mask of its non-hub vertices.
inline void cycles_through_hub(const Digraph& d, Vertex hub, std::vector<Mask>& found) {
  std::vector<Vertex> stack;
  auto dfs = [&](auto&& self, Vertex tip, Mask used) -> void {
    for (Vertex w : d.out(tip)) {
      if (w == hub) {
        found.push_back(used);
      } else if (!(used & bit(w))) {
        self(self, w, used | bit(w));
      }
    }
  };
  for (Vertex first : d.out(hub)) dfs(dfs, first, bit(first));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
}

/// Largest family of pairwise-disjoint masks (plain exhaustive recursion).
inline int max_disjoint_family(const std::vector<Mask>& sets, std::size_t from, Mask used) {
  int best = 0;
  for (std::size_t i = from; i < sets.size(); ++i) {
    if (sets[i] & used) continue;
    best = std::max(best, 1 + max_disjoint_family(sets, i + 1, used | sets[i]));
  }
  return best;
}

/// c(D) by enumerating cycle families; keep n <= 6 or so.
inline int c_by_cycle_families(const Digraph& d) {
  int best = 0;
  for (Vertex hub = 0; hub < d.n(); ++hub) {
    std::vector<Mask> cycles;
    cycles_through_hub(d, hub, cycles);
    best = std::max(best, max_disjoint_family(cycles, 0, 0));
  }
  return best;
}

/// Number of vertex-disjoint paths found by exhaustive search over path
/// families (all simple U->W paths, trimmed or not, disjoint packing).
inline int max_disjoint_paths_brute(const Digraph& d, const VertexSet& u, const VertexSet& w) {
  std::vector<Mask> paths;
  const Mask sinks = to_mask(w);
  auto dfs = [&](auto&& self, Vertex tip, Mask used) -> void {
    if (sinks & bit(tip)) paths.push_back(used);
    for (Vertex x : d.out(tip)) {
      if (!(used & bit(x))) self(self, x, used | bit(x));
    }
  };
  for (Vertex s : u) dfs(dfs, s, bit(s));
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return max_disjoint_family(paths, 0, 0);
}

/// True iff every partition with both sides >= gamma r has a[X,Y] > beta r^2.
/// Rational comparisons on purpose, no integer thresholds.
inline bool cut_property_holds(const Digraph& d, int r, const Rational& beta, const Rational& gamma) {
  const int n = d.n();
  const auto arcs = d.arcs();
  const Mask all = bit(n) - 1;
  for (Mask x = 1; x < all; ++x) {
    Rational size_x = std::popcount(x);
    Rational size_y = n - std::popcount(x);
    if (size_x < gamma * r || size_y < gamma * r) continue;
    std::int64_t cut = 0;
    for (auto [a, b] : arcs) cut += ((x >> a) & 1) != ((x >> b) & 1) ? 1 : 0;
    if (Rational(cut) <= beta * r * r) return false;
  }
  return true;
}

/// Transitive-closure SCC check: is there an SCC of D - S holding more than
/// half of L?
inline bool majority_component(const Digraph& d, Mask deleted, Mask linked) {
  const int n = d.n();
  auto out = out_masks(d);
  const Mask alive = (bit(n) - 1) & ~deleted;
  std::vector<Mask> fwd(n, 0);
  for (int v = 0; v < n; ++v) {
    if (alive & bit(v)) fwd[v] = reach(out, bit(v), alive);
  }
  const int l = std::popcount(linked);
  for (int v = 0; v < n; ++v) {
    if (!(alive & bit(v))) continue;
    Mask component = 0;
    for (int w = 0; w < n; ++w) {
      if ((alive & bit(w)) && (fwd[v] & bit(w)) && (fwd[w] & bit(v))) component |= bit(w);
    }
    if (2 * std::popcount(component & linked) > l) return true;
  }
  return false;
}

inline bool k_linked_brute(const Digraph& d, const VertexSet& linked, int k) {
  const int n = d.n();
  const Mask l = to_mask(linked);
  for (Mask s = 0; s < bit(n); ++s) {
    if (std::popcount(s) >= k) continue;
    if (!majority_component(d, s, l)) return false;
  }
  return true;
}

/// Treewidth as min over all elimination orders of the max degree at
/// elimination time, with explicit fill-in. Only for tiny graphs.
inline int treewidth_by_orders(const UGraph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<Mask> adj(n, 0);
    for (auto [a, b] : g.edges()) {
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
    Mask gone = 0;
    int width = 0;
    for (int v : order) {
      Mask nb = adj[v] & ~gone;
      width = std::max(width, std::popcount(nb));
      for (Mask rest = nb; rest; rest &= rest - 1) {
        int a = std::countr_zero(rest);
        adj[a] |= nb & ~bit(a);
      }
      gone |= bit(v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.emplace_back(u, v);
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

inline UGraph random_ugraph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return UGraph::from_edge_list(n, edges);
}

inline Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  for (auto [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
  return Digraph::from_arc_list(d.n(), arcs);
}

inline VertexSet random_subset(int n, std::mt19937_64& rng, double p = 0.4) {
  std::bernoulli_distribution coin(p);
  std::vector<Vertex> ids;
  for (int v = 0; v < n; ++v) {
    if (coin(rng)) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

/// Digraph whose arcs are the bits of `mask` over the ordered pairs u != v.
inline Digraph digraph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<Arc> arcs;
  int index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> index) & 1) arcs.emplace_back(u, v);
      ++index;
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace regcyc::oracle
