#include "regcyc/menger.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace regcyc {

namespace {

// Dinic on the split network: in(v) = 2v, out(v) = 2v + 1, internal arc of
// capacity 1, everything else unbounded so minimum cuts are vertex cuts.
class SplitNetwork {
 public:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  explicit SplitNetwork(int n) : n_(n), head_(2 * n + 2) {}

  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  void add_edge(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap, cap});
    head_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, 0});
  }

  int max_flow() {
    int flow = 0;
    while (build_levels()) {
      next_.assign(head_.size(), 0);
      while (int pushed = augment(source(), kInf)) flow += pushed;
    }
    return flow;
  }

  int flow_on(int edge) const { return edges_[edge].cap - edges_[edge].residual; }
  const std::vector<int>& edges_at(int node) const { return head_[node]; }
  int target(int edge) const { return edges_[edge].to; }

  /// Nodes reachable from the source in the residual network.
  std::vector<bool> residual_reach() const {
    std::vector<bool> seen(head_.size(), false);
    std::deque<int> queue{source()};
    seen[source()] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : head_[u]) {
        int v = edges_[e].to;
        if (edges_[e].residual > 0 && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int cap;
    int residual;
  };

  bool build_levels() {
    level_.assign(head_.size(), -1);
    std::deque<int> queue{source()};
    level_[source()] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : head_[u]) {
        int v = edges_[e].to;
        if (edges_[e].residual > 0 && level_[v] < 0) {
          level_[v] = level_[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return level_[sink()] >= 0;
  }

  int augment(int u, int limit) {
    if (u == sink()) return limit;
    for (auto& i = next_[u]; i < head_[u].size(); ++i) {
      int e = head_[u][i];
      int v = edges_[e].to;
      if (edges_[e].residual <= 0 || level_[v] != level_[u] + 1) continue;
      if (int pushed = augment(v, std::min(limit, edges_[e].residual))) {
        edges_[e].residual -= pushed;
        edges_[e ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int n_;
  std::vector<std::vector<int>> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

std::vector<Vertex> trim(const std::vector<Vertex>& path, const std::vector<bool>& is_source,
                         const std::vector<bool>& is_sink) {
  std::size_t first = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (is_source[path[i]]) first = i;
  }
  std::size_t last = first;
  while (!is_sink[path[last]]) ++last;
  return {path.begin() + first, path.begin() + last + 1};
}

Separator separator_from_cut(const Digraph& d, const VertexSet& sources, VertexSet cut) {
  auto blocked = cut.indicator(d.n());
  auto reach = reachable_from(d, sources.ids(), blocked);
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < d.n(); ++v) {
    if (blocked[v]) continue;
    (reach[v] ? a : b).push_back(v);
  }
  return {std::move(cut), VertexSet(std::move(a)), VertexSet(std::move(b))};
}

}  // namespace

MengerResult max_disjoint_paths(const Digraph& d, const VertexSet& sources, const VertexSet& sinks) {
  if (sources.empty() || sinks.empty()) {
    throw Error(ErrorCode::kEmptySet, "source and sink sets must be nonempty");
  }
  const int n = d.n();
  auto is_source = sources.indicator(n);
  auto is_sink = sinks.indicator(n);

  SplitNetwork net(n);
  for (Vertex v : sources) net.add_edge(net.source(), 2 * v, SplitNetwork::kInf);
  for (Vertex v = 0; v < n; ++v) {
    net.add_edge(2 * v, 2 * v + 1, 1);
    for (Vertex w : d.out(v)) net.add_edge(2 * v + 1, 2 * w, SplitNetwork::kInf);
    if (is_sink[v]) net.add_edge(2 * v + 1, net.sink(), SplitNetwork::kInf);
  }
  net.max_flow();

  MengerResult result;
  result.family.sources = sources;
  result.family.sinks = sinks;
  for (int e : net.edges_at(net.source())) {
    if (e % 2 != 0 || net.flow_on(e) <= 0) continue;
    Vertex current = net.target(e) / 2;
    std::vector<Vertex> path{current};
    for (;;) {
      int next = -1;
      for (int f : net.edges_at(2 * current + 1)) {
        if (f % 2 == 0 && net.flow_on(f) > 0) {
          next = net.target(f);
          break;
        }
      }
      if (next == net.sink()) break;
      current = next / 2;
      path.push_back(current);
    }
    result.family.paths.push_back(trim(path, is_source, is_sink));
  }
  std::sort(result.family.paths.begin(), result.family.paths.end());

  auto reach = net.residual_reach();
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < n; ++v) {
    if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  }
  result.separator = separator_from_cut(d, sources, VertexSet(std::move(cut)));
  return result;
}

MengerResult separate_neighborhoods(const Digraph& d, Vertex v) {
  d.check_vertex(v);
  VertexSet out_nbrs(std::vector<Vertex>(d.out(v).begin(), d.out(v).end()));
  VertexSet in_nbrs(std::vector<Vertex>(d.in(v).begin(), d.in(v).end()));
  if (out_nbrs.empty() || in_nbrs.empty()) {
    MengerResult result;
    result.family.sources = out_nbrs;
    result.family.sinks = in_nbrs;
    result.separator = separator_from_cut(d, out_nbrs, VertexSet{});
    return result;
  }
  return max_disjoint_paths(d, out_nbrs, in_nbrs);
}

bool verify_path_family(const Digraph& d, const VertexSet& sources, const VertexSet& sinks,
                        const PathFamily& family) {
  const int n = d.n();
  if (!(family.sources == sources) || !(family.sinks == sinks)) return false;
  try {
    sources.check_range(n);
    sinks.check_range(n);
  } catch (const Error&) {
    return false;
  }
  std::vector<bool> used(n, false);
  for (const auto& path : family.paths) {
    if (path.empty()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      Vertex v = path[i];
      if (v < 0 || v >= n || used[v]) return false;
      used[v] = true;
      bool first = i == 0;
      bool last = i + 1 == path.size();
      if (sources.contains(v) != first) return false;
      if (sinks.contains(v) != last) return false;
      if (!last && !d.has_arc(v, path[i + 1])) return false;
    }
  }
  return true;
}

bool verify_separator(const Digraph& d, const VertexSet& sources, const VertexSet& sinks,
                      const Separator& sep) {
  const int n = d.n();
  try {
    sources.check_range(n);
    sinks.check_range(n);
    sep.cut.check_range(n);
    sep.reach.check_range(n);
    sep.rest.check_range(n);
  } catch (const Error&) {
    return false;
  }
  std::vector<int> part(n, -1);
  auto assign = [&](const VertexSet& s, int tag) {
    for (Vertex v : s) {
      if (part[v] >= 0) return false;
      part[v] = tag;
    }
    return true;
  };
  if (!assign(sep.cut, 0) || !assign(sep.reach, 1) || !assign(sep.rest, 2)) return false;
  if (std::count(part.begin(), part.end(), -1) != 0) return false;

  for (Vertex u : sep.reach) {
    for (Vertex v : d.out(u)) {
      if (part[v] == 2) return false;
    }
  }
  std::vector<bool> blocked(n);
  for (Vertex v = 0; v < n; ++v) blocked[v] = part[v] == 0;
  auto reach = reachable_from(d, sources.ids(), blocked);
  for (Vertex w : sinks) {
    if (reach[w]) return false;
  }
  return true;
}

}  // namespace regcyc
