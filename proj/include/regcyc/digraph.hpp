#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "regcyc/error.hpp"

namespace regcyc {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(int n);

  std::span<const Vertex> ids() const noexcept { return ids_; }
  const std::vector<Vertex>& vec() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  /// Throws kVertexOutOfRange unless every id lies in [0, n).
  void check_range(int n) const;
  std::vector<bool> indicator(int n) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

/// Simple loop-free digraph on vertices 0..n-1. Immutable once built;
/// neighbor lists are sorted ascending.
class Digraph {
 public:
  Digraph() = default;

  /// Rejects loops, duplicate arcs and out-of-range ids, naming the arc.
  static Digraph from_arc_list(int n, std::span<const Arc> arcs);
  static Digraph from_arc_list(int n, std::initializer_list<Arc> arcs) {
    return from_arc_list(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int n() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const noexcept { return arc_count_; }

  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }
  bool has_arc(Vertex u, Vertex v) const;

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  int max_out_degree() const;
  int max_in_degree() const;
  int min_out_degree() const;
  int min_in_degree() const;

  void check_vertex(Vertex v) const;

  bool operator==(const Digraph& other) const { return out_ == other.out_; }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// Induced subdigraph together with the relabeling used.
struct InducedSubdigraph {
  Digraph graph;
  std::vector<Vertex> to_original;  // new id -> old id
  std::vector<int> to_local;        // old id -> new id, -1 if dropped
};

struct CutCounts {
  std::size_t forward = 0;  // a(X,Y)
  std::size_t both = 0;     // a[X,Y] = a(X,Y) + a(Y,X)
};

std::optional<int> is_regular(const Digraph& d);
bool is_eulerian(const Digraph& d);
InducedSubdigraph induced(const Digraph& d, const VertexSet& keep);
Digraph reverse(const Digraph& d);
CutCounts arcs_between(const Digraph& d, const VertexSet& x, const VertexSet& y);

/// Component index per vertex plus the component count. Vertices marked in
/// `removed` get index -1 and are treated as deleted.
struct ComponentLabels {
  std::vector<int> label;
  int count = 0;
};
ComponentLabels scc_labels(const Digraph& d, const std::vector<bool>* removed = nullptr);

/// Strongly connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> scc(const Digraph& d);

/// Vertices reachable from `sources` avoiding `blocked` (sources themselves
/// count when not blocked).
std::vector<bool> reachable_from(const Digraph& d, std::span<const Vertex> sources,
                                 const std::vector<bool>& blocked);

/// Length of a shortest directed cycle, absent for acyclic digraphs.
std::optional<int> girth(const Digraph& d);

/// Simple undirected graph on 0..n-1, used for digon graphs and treewidth.
class UGraph {
 public:
  UGraph() = default;
  static UGraph from_edge_list(int n, std::span<const Arc> edges);
  static UGraph from_edge_list(int n, std::initializer_list<Arc> edges) {
    return from_edge_list(n, std::span<const Arc>(edges.begin(), edges.size()));
  }

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Edges (u,v) with u < v, lexicographic.
  std::vector<Arc> edges() const;

  bool operator==(const UGraph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace regcyc
