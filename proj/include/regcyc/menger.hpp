#pragma once

#include <vector>

#include "regcyc/digraph.hpp"

namespace regcyc {

/// Pairwise vertex-disjoint directed paths from `sources` to `sinks`, each
/// trimmed so its first vertex is its only source and its last vertex its
/// only sink. A one-vertex path is a vertex in both sets.
struct PathFamily {
  std::vector<std::vector<Vertex>> paths;
  VertexSet sources;
  VertexSet sinks;

  std::size_t size() const noexcept { return paths.size(); }
};

/// Vertex set S meeting every source-to-sink path, with (A, B) partitioning
/// the rest: A is everything reachable from the sources in D - S, and no
/// arc runs from A to B.
struct Separator {
  VertexSet cut;
  VertexSet reach;  // A
  VertexSet rest;   // B
};

struct MengerResult {
  PathFamily family;
  Separator separator;
};

/// Maximum vertex-disjoint path family and a minimum separator of equal size.
MengerResult max_disjoint_paths(const Digraph& d, const VertexSet& sources, const VertexSet& sinks);

/// Menger between N+(v) and N-(v). Returned paths avoid v, so closing each
/// one through v gives openly disjoint cycles at v.
MengerResult separate_neighborhoods(const Digraph& d, Vertex v);

bool verify_path_family(const Digraph& d, const VertexSet& sources, const VertexSet& sinks,
                        const PathFamily& family);
bool verify_separator(const Digraph& d, const VertexSet& sources, const VertexSet& sinks,
                      const Separator& sep);

}  // namespace regcyc
