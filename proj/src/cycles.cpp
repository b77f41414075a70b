#include "regcyc/cycles.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "regcyc/menger.hpp"

namespace regcyc {

namespace {

CyclePacking close_paths(Vertex hub, const std::vector<std::vector<Vertex>>& paths) {
  CyclePacking packing;
  packing.hub = hub;
  for (const auto& path : paths) {
    std::vector<Vertex> cycle;
    cycle.reserve(path.size() + 2);
    cycle.push_back(hub);
    cycle.insert(cycle.end(), path.begin(), path.end());
    cycle.push_back(hub);
    packing.cycles.push_back(std::move(cycle));
  }
  return packing;
}

CNumber pick_best(const Digraph& d, const std::vector<int>& sizes) {
  CNumber result;
  Vertex best = 0;
  for (Vertex v = 0; v < d.n(); ++v) {
    if (sizes[v] > result.c) {
      result.c = sizes[v];
      best = v;
    }
  }
  if (d.n() > 0) result.best = cycles_through(d, best);
  return result;
}

int hub_value(const Digraph& d, Vertex v) {
  return static_cast<int>(separate_neighborhoods(d, v).family.size());
}

}  // namespace

CyclePacking cycles_through(const Digraph& d, Vertex v) {
  auto menger = separate_neighborhoods(d, v);
  return close_paths(v, menger.family.paths);
}

CNumber c_number(const Digraph& d, int jobs) {
  const int n = d.n();
  std::vector<int> sizes(n, 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int v = 0; v < n; ++v) sizes[v] = hub_value(d, v);
  return pick_best(d, sizes);
}

CNumber c_number_serial(const Digraph& d) {
  std::vector<int> sizes(d.n(), 0);
  for (Vertex v = 0; v < d.n(); ++v) sizes[v] = hub_value(d, v);
  return pick_best(d, sizes);
}

bool verify_cycle_packing(const Digraph& d, const CyclePacking& packing) {
  const int n = d.n();
  if (packing.hub < 0 || packing.hub >= n) return false;
  std::vector<bool> used(n, false);
  for (const auto& cycle : packing.cycles) {
    if (cycle.size() < 3 || cycle.front() != packing.hub || cycle.back() != packing.hub) return false;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      Vertex u = cycle[i];
      Vertex w = cycle[i + 1];
      if (w < 0 || w >= n) return false;
      if (!d.has_arc(u, w)) return false;
      if (i + 2 < cycle.size()) {
        if (w == packing.hub || used[w]) return false;
        used[w] = true;
      }
    }
  }
  return true;
}

namespace {

// Branches on the hub's out-neighbors in order: each either starts a new
// cycle (enumerating every simple path from it back into N-(hub) over unused
// vertices) or is skipped.
class BruteForcePacker {
 public:
  BruteForcePacker(const Digraph& d, Vertex hub) : d_(d), hub_(hub) {
    starts_.assign(d.out(hub).begin(), d.out(hub).end());
    for (Vertex u : d.in(hub)) closes_ |= bit(u);
    limit_ = std::min(d.out_degree(hub), d.in_degree(hub));
  }

  int run() {
    branch(0, bit(hub_), 0);
    return best_;
  }

 private:
  static std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }

  void branch(std::size_t index, std::uint32_t used, int count) {
    best_ = std::max(best_, count);
    if (best_ >= limit_) return;
    if (index == starts_.size()) return;
    if (count + static_cast<int>(starts_.size() - index) <= best_) return;
    Vertex start = starts_[index];
    if (!(used & bit(start))) extend(start, index, used | bit(start), count);
    branch(index + 1, used, count);
  }

  void extend(Vertex tip, std::size_t index, std::uint32_t used, int count) {
    if (best_ >= limit_) return;
    if (closes_ & bit(tip)) branch(index + 1, used, count + 1);
    for (Vertex w : d_.out(tip)) {
      if (used & bit(w)) continue;
      extend(w, index, used | bit(w), count);
    }
  }

  const Digraph& d_;
  Vertex hub_;
  std::vector<Vertex> starts_;
  std::uint32_t closes_ = 0;
  int limit_ = 0;
  int best_ = 0;
};

}  // namespace

int c_brute_force(const Digraph& d) {
  if (d.n() > kBruteForceMaxVertices) {
    throw Error(ErrorCode::kCapExceeded, "brute force limited to " +
                                             std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  int best = 0;
  for (Vertex v = 0; v < d.n(); ++v) best = std::max(best, BruteForcePacker(d, v).run());
  return best;
}

int cycle_lower_bound(int r) { return (3 * r + 21) / 22; }

namespace {

int require_regular(const Digraph& d) {
  auto r = is_regular(d);
  if (!r || *r < 1) throw Error(ErrorCode::kNotRegular, "input is not r-regular with r >= 1");
  return *r;
}

}  // namespace

CyclePacking guaranteed_packing(const Digraph& d) {
  const int r = require_regular(d);
  const int bound = cycle_lower_bound(r);
  for (Vertex v = 0; v < d.n(); ++v) {
    auto packing = cycles_through(d, v);
    if (static_cast<int>(packing.size()) >= bound) {
      if (!verify_cycle_packing(d, packing)) {
        throw Error(ErrorCode::kSoundness, "packing at hub " + std::to_string(v) + " failed verification");
      }
      return packing;
    }
  }
  throw Error(ErrorCode::kSoundness,
              "no hub carries " + std::to_string(bound) + " openly disjoint cycles in an " +
                  std::to_string(r) + "-regular digraph");
}

TraceReport theorem1_trace(const Digraph& d, const TraceOptions& options) {
  const int r = require_regular(d);
  TraceReport report;
  report.params = cycle_bound_params(r);
  report.bound = cycle_lower_bound(r);
  const auto& p = report.params;

  auto dense = dense_subdigraph(d, r, p.beta, p.gamma, options.search);
  report.dense = dense.witness;
  const Digraph& sub = dense.sub.graph;
  const bool verified = dense.witness.verified;

  if (auto local = high_degree_vertex(sub, r, p.delta)) {
    const Vertex hub = dense.sub.to_original[*local];
    report.hub = hub;
    report.hub_from_lemma = true;
    auto menger = separate_neighborhoods(d, hub);
    report.packing = close_paths(hub, menger.family.paths);
    report.separator_size = static_cast<int>(menger.separator.cut.size());

    std::int64_t cut_inside = 0;
    for (Vertex s : menger.separator.cut) cut_inside += dense.sub.to_local[s] >= 0 ? 1 : 0;
    const Rational remaining = sub.n() - cut_inside;
    report.argument_applies = verified && remaining > 2 * p.gamma * r;

    if (static_cast<int>(report.packing.size()) < report.bound) {
      if (report.argument_applies) {
        throw Error(ErrorCode::kSoundness,
                    "separator of size " + std::to_string(report.separator_size) +
                        " at the high-degree hub contradicts the cut property of D'");
      }
      report.packing = guaranteed_packing(d);
      report.hub_from_lemma = false;
    }
  } else {
    // No high-degree vertex: the lemma then forces c(D') >= alpha r.
    if (verified && c_number(sub, options.jobs).c < report.bound) {
      throw Error(ErrorCode::kSoundness, "exact D' has no high-degree vertex yet c(D') < alpha r");
    }
    report.packing = guaranteed_packing(d);
  }

  if (!verify_cycle_packing(d, report.packing)) {
    throw Error(ErrorCode::kSoundness, "trace packing failed verification");
  }
  report.bound_met = static_cast<int>(report.packing.size()) >= report.bound;
  if (!report.bound_met) throw Error(ErrorCode::kSoundness, "packing below ceil(3r/22)");
  return report;
}

}  // namespace regcyc
