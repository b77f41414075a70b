#include "regcyc/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

namespace regcyc {

Digraph blow_up(const Digraph& d, int b) {
  if (b < 1) throw Error(ErrorCode::kInvalidArgument, "blow-up factor must be >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count() * static_cast<std::size_t>(b) * b);
  for (auto [u, v] : d.arcs()) {
    for (int i = 0; i < b; ++i) {
      for (int j = 0; j < b; ++j) arcs.emplace_back(u * b + i, v * b + j);
    }
  }
  return Digraph::from_arc_list(d.n() * b, arcs);
}

Wall cylindrical_wall(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "wall order must be >= 1");
  WallCoords coords{k};
  const int side = coords.side();
  auto up = [side](int y) { return y % side + 1; };  // y + 1 mod 2k, mapped into [1, 2k]
  std::vector<Arc> arcs;
  for (int y = 1; y <= side; ++y) {
    for (int x = 1; x <= side; ++x) {
      const Vertex from = coords.id(x, y);
      if (y % 2 == 1 && x + 1 <= side) arcs.emplace_back(from, coords.id(x + 1, y));
      if (y % 2 == 0 && x - 1 >= 1) arcs.emplace_back(from, coords.id(x - 1, y));
      if (x % 2 == 1 && y % 2 == 0) arcs.emplace_back(from, coords.id(x, up(y)));
      if (x % 2 == 0 && y % 2 == 1) arcs.emplace_back(from, coords.id(x, up(y)));
    }
  }
  return {Digraph::from_arc_list(side * side, arcs), coords};
}

Digraph complete_biorientation(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "vertex count must be >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

Digraph join_construction(const Digraph& first, const Digraph& second) {
  const int shift = first.n();
  std::vector<Arc> arcs = first.arcs();
  for (auto [u, v] : second.arcs()) arcs.emplace_back(u + shift, v + shift);
  for (Vertex u = 0; u < second.n(); ++u) {
    for (Vertex v = 0; v < first.n(); ++v) arcs.emplace_back(u + shift, v);
  }
  return Digraph::from_arc_list(first.n() + second.n(), arcs);
}

Digraph random_regular_digraph(int n, int r, std::uint64_t seed) {
  if (r < 1 || r >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= r <= n-1, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> taken(n, std::vector<char>(n, 0));
  for (Vertex v = 0; v < n; ++v) taken[v][v] = 1;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * r);

  for (int layer = 0; layer < r; ++layer) {
    // Start from a shuffled permutation, drop the clashing positions, then
    // complete it with augmenting paths. The free pairs form a regular
    // bipartite graph, so a perfect matching always exists.
    std::vector<Vertex> image(n), owner(n, -1), match(n, -1);
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    for (Vertex u = 0; u < n; ++u) {
      if (!taken[u][image[u]]) {
        match[u] = image[u];
        owner[image[u]] = u;
      }
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> visited(n, -1);
    std::function<bool(Vertex, int)> augment = [&](Vertex u, int stamp) {
      std::shuffle(order.begin(), order.end(), rng);
      const std::vector<Vertex> candidates = order;
      for (Vertex v : candidates) {
        if (taken[u][v] || visited[v] == stamp) continue;
        visited[v] = stamp;
        if (owner[v] < 0 || augment(owner[v], stamp)) {
          match[u] = v;
          owner[v] = u;
          return true;
        }
      }
      return false;
    };
    for (Vertex u = 0; u < n; ++u) {
      if (match[u] >= 0) continue;
      if (!augment(u, u)) throw Error(ErrorCode::kBudgetExceeded, "random regular digraph: no completion found");
    }
    for (Vertex u = 0; u < n; ++u) {
      taken[u][match[u]] = 1;
      arcs.emplace_back(u, match[u]);
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

Digraph directed_cycle(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "directed cycle needs n >= 2");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph::from_arc_list(n, arcs);
}

Digraph directed_path(int n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
  return Digraph::from_arc_list(n, arcs);
}

}  // namespace regcyc
