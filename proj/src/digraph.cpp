#include "regcyc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace regcyc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopArc: return "loop";
    case ErrorCode::kDuplicateArc: return "duplicate";
    case ErrorCode::kVertexOutOfRange: return "out of range";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kOverlappingSets: return "overlapping sets";
    case ErrorCode::kEmptySet: return "empty set";
    case ErrorCode::kNotRegular: return "not regular";
    case ErrorCode::kNotDense: return "not dense";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kBudgetExceeded: return "budget exceeded";
    case ErrorCode::kNoMajorityComponent: return "no majority SCC";
    case ErrorCode::kUnverifiedCertificate: return "unverified certificate";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kSoundness: return "soundness failure";
  }
  return "error";
}

namespace {

std::string arc_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.ids_.resize(n);
  for (int i = 0; i < n; ++i) s.ids_[i] = i;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::check_range(int n) const {
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n)) {
    Vertex bad = ids_.front() < 0 ? ids_.front() : ids_.back();
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(bad) + " not in [0," + std::to_string(n) + ")");
  }
}

std::vector<bool> VertexSet::indicator(int n) const {
  check_range(n);
  std::vector<bool> mark(n, false);
  for (Vertex v : ids_) mark[v] = true;
  return mark;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Digraph Digraph::from_arc_list(int n, std::span<const Arc> arcs) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  Digraph d;
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "arc " + arc_str(u, v));
    }
    if (u == v) throw Error(ErrorCode::kLoopArc, "arc " + arc_str(u, v));
    d.out_[u].push_back(v);
    d.in_[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    auto& list = d.out_[u];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) throw Error(ErrorCode::kDuplicateArc, "arc " + arc_str(u, *dup));
    std::sort(d.in_[u].begin(), d.in_[u].end());
  }
  d.arc_count_ = arcs.size();
  return d;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto& list = out_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (int u = 0; u < n(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

namespace {

template <class Pick>
int degree_extreme(const std::vector<std::vector<Vertex>>& lists, Pick pick) {
  if (lists.empty()) return 0;
  int best = static_cast<int>(lists.front().size());
  for (const auto& l : lists) best = pick(best, static_cast<int>(l.size()));
  return best;
}

}  // namespace

int Digraph::max_out_degree() const {
  return degree_extreme(out_, [](int a, int b) { return std::max(a, b); });
}
int Digraph::max_in_degree() const {
  return degree_extreme(in_, [](int a, int b) { return std::max(a, b); });
}
int Digraph::min_out_degree() const {
  return degree_extreme(out_, [](int a, int b) { return std::min(a, b); });
}
int Digraph::min_in_degree() const {
  return degree_extreme(in_, [](int a, int b) { return std::min(a, b); });
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0," + std::to_string(n()) + ")");
  }
}

std::optional<int> is_regular(const Digraph& d) {
  if (d.n() == 0) return std::nullopt;
  int r = d.out_degree(0);
  for (Vertex v = 0; v < d.n(); ++v) {
    if (d.out_degree(v) != r || d.in_degree(v) != r) return std::nullopt;
  }
  return r;
}

bool is_eulerian(const Digraph& d) {
  for (Vertex v = 0; v < d.n(); ++v) {
    if (d.out_degree(v) != d.in_degree(v)) return false;
  }
  return true;
}

InducedSubdigraph induced(const Digraph& d, const VertexSet& keep) {
  keep.check_range(d.n());
  InducedSubdigraph result;
  result.to_original = keep.vec();
  result.to_local.assign(d.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) result.to_local[keep.vec()[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (Vertex u : keep) {
    for (Vertex v : d.out(u)) {
      if (result.to_local[v] >= 0) arcs.emplace_back(result.to_local[u], result.to_local[v]);
    }
  }
  result.graph = Digraph::from_arc_list(static_cast<int>(keep.size()), arcs);
  return result;
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
  return Digraph::from_arc_list(d.n(), arcs);
}

CutCounts arcs_between(const Digraph& d, const VertexSet& x, const VertexSet& y) {
  auto in_x = x.indicator(d.n());
  auto in_y = y.indicator(d.n());
  for (Vertex v : x) {
    if (in_y[v]) {
      throw Error(ErrorCode::kOverlappingSets, "vertex " + std::to_string(v) + " in both sets");
    }
  }
  CutCounts counts;
  for (Vertex u : x) {
    for (Vertex v : d.out(u)) counts.forward += in_y[v] ? 1 : 0;
  }
  std::size_t backward = 0;
  for (Vertex u : y) {
    for (Vertex v : d.out(u)) backward += in_x[v] ? 1 : 0;
  }
  counts.both = counts.forward + backward;
  return counts;
}

ComponentLabels scc_labels(const Digraph& d, const std::vector<bool>* removed) {
  const int n = d.n();
  ComponentLabels result;
  result.label.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  // Explicit DFS frames: vertex plus position in its out-list.
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0 || (removed && (*removed)[root])) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto nbrs = d.out(v);
      if (pos < nbrs.size()) {
        Vertex w = nbrs[pos++];
        if (removed && (*removed)[w]) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.label[w] = result.count;
        } while (w != done);
        ++result.count;
      }
    }
  }
  return result;
}

std::vector<VertexSet> scc(const Digraph& d) {
  auto labels = scc_labels(d);
  std::vector<std::vector<Vertex>> classes(labels.count);
  for (Vertex v = 0; v < d.n(); ++v) classes[labels.label[v]].push_back(v);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<VertexSet> result;
  result.reserve(classes.size());
  for (auto& c : classes) result.emplace_back(std::move(c));
  return result;
}

std::vector<bool> reachable_from(const Digraph& d, std::span<const Vertex> sources,
                                 const std::vector<bool>& blocked) {
  std::vector<bool> seen(d.n(), false);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!blocked[s] && !seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : d.out(u)) {
      if (!blocked[v] && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

std::optional<int> girth(const Digraph& d) {
  std::optional<int> best;
  std::vector<int> dist(d.n());
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < d.n(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, s);
    bool closed = false;
    while (!queue.empty() && !closed) {
      Vertex u = queue.front();
      queue.pop_front();
      if (best && dist[u] + 1 >= *best) break;
      for (Vertex v : d.out(u)) {
        if (v == s) {
          best = dist[u] + 1;
          closed = true;
          break;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return best;
}

UGraph UGraph::from_edge_list(int n, std::span<const Arc> edges) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  UGraph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange, "edge " + arc_str(u, v));
    }
    if (u == v) throw Error(ErrorCode::kLoopArc, "edge " + arc_str(u, v));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    auto& list = g.adj_[u];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) throw Error(ErrorCode::kDuplicateArc, "edge " + arc_str(u, *dup));
  }
  g.edge_count_ = edges.size();
  return g;
}

bool UGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Arc> UGraph::edges() const {
  std::vector<Arc> result;
  for (int u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

}  // namespace regcyc
