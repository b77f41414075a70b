#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "regcyc/digraph.hpp"

namespace regcyc {

/// Vertex (u, i) of the blow-up has id u*b + i; (u,i) -> (v,j) iff u -> v.
Digraph blow_up(const Digraph& d, int b);

/// Grid coordinates of a cylindrical wall, 1-based in [2k] x [2k]. The id
/// of (x, y) is (y-1)*2k + (x-1).
struct WallCoords {
  int k = 1;

  int side() const { return 2 * k; }
  Vertex id(int x, int y) const { return (y - 1) * side() + (x - 1); }
  std::pair<int, int> coords(Vertex v) const { return {v % side() + 1, v / side() + 1}; }
};

struct Wall {
  Digraph graph;
  WallCoords coords;
};

/// Odd rows run right, even rows run left; vertical arcs go up (mod 2k) in
/// odd columns from even rows and in even columns from odd rows.
Wall cylindrical_wall(int k);

/// All n(n-1) arcs on n vertices.
Digraph complete_biorientation(int n);

/// Disjoint union of first and second plus every arc from second to first.
Digraph join_construction(const Digraph& first, const Digraph& second);

/// Union of r fixed-point-free permutations with pairwise disjoint arc sets.
Digraph random_regular_digraph(int n, int r, std::uint64_t seed);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(int n);
/// Directed path 0 -> 1 -> ... -> n-1.
Digraph directed_path(int n);

}  // namespace regcyc
