#include "regcyc/dtw.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace regcyc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result = result * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (result > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(result);
}

// Lexicographic unranking of a size-`size` combination of {0..n-1}.
void unrank(int n, int size, std::uint64_t rank, std::vector<Vertex>& out) {
  out.clear();
  Vertex candidate = 0;
  for (int pos = 0; pos < size; ++pos) {
    for (;; ++candidate) {
      std::uint64_t block = binom(n - candidate - 1, size - pos - 1);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(candidate++);
  }
}

bool next_combination(int n, std::vector<Vertex>& combo) {
  int size = static_cast<int>(combo.size());
  int i = size - 1;
  while (i >= 0 && combo[i] == n - size + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

class MajorityTester {
 public:
  MajorityTester(const Digraph& d, const VertexSet& linked)
      : d_(d), in_linked_(linked.indicator(d.n())), linked_size_(linked.size()) {}

  /// Index of the SCC of D - S holding a majority of L, or -1.
  int majority(const std::vector<Vertex>& deleted, ComponentLabels& labels) {
    removed_.assign(d_.n(), false);
    for (Vertex v : deleted) removed_[v] = true;
    labels = scc_labels(d_, &removed_);
    counts_.assign(labels.count, 0);
    for (Vertex v = 0; v < d_.n(); ++v) {
      if (in_linked_[v] && labels.label[v] >= 0) ++counts_[labels.label[v]];
    }
    for (int c = 0; c < labels.count; ++c) {
      if (2 * counts_[c] > linked_size_) return c;
    }
    return -1;
  }

  bool holds(const std::vector<Vertex>& deleted) {
    ComponentLabels labels;
    return majority(deleted, labels) >= 0;
  }

 private:
  const Digraph& d_;
  std::vector<bool> in_linked_;
  std::size_t linked_size_;
  std::vector<bool> removed_;
  std::vector<std::size_t> counts_;
};

void validate_linked_args(const Digraph& d, const VertexSet& linked, int k, std::uint64_t budget) {
  linked.check_range(d.n());
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  std::uint64_t needed = deletion_sets_below(d.n(), k);
  if (needed > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "k-linked check needs " + std::to_string(needed) +
                                                " deletion sets, budget " + std::to_string(budget));
  }
}

}  // namespace

std::uint64_t deletion_sets_below(int n, int k) {
  std::uint64_t total = 0;
  for (int i = 0; i < k && i <= n; ++i) {
    std::uint64_t term = binom(n, i);
    if (term == kSaturated || total > kSaturated - term) return kSaturated;
    total += term;
  }
  return total;
}

LinkedCheck check_k_linked(const Digraph& d, const VertexSet& linked, int k, std::uint64_t budget,
                           int jobs) {
  validate_linked_args(d, linked, k, budget);
  const int n = d.n();
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  LinkedCheck result;
  for (int size = 0; size < k && size <= n; ++size) {
    const std::int64_t total = static_cast<std::int64_t>(binom(n, size));
    std::uint64_t first_fail = kSaturated;
#pragma omp parallel num_threads(threads)
    {
      MajorityTester tester(d, linked);
      std::vector<Vertex> combo;
#pragma omp for schedule(static) reduction(min : first_fail)
      for (std::int64_t rank = 0; rank < total; ++rank) {
        if (static_cast<std::uint64_t>(rank) >= first_fail) continue;
        unrank(n, size, static_cast<std::uint64_t>(rank), combo);
        if (!tester.holds(combo)) first_fail = static_cast<std::uint64_t>(rank);
      }
    }
    if (first_fail != kSaturated) {
      std::vector<Vertex> combo;
      unrank(n, size, first_fail, combo);
      result.failing = VertexSet(std::move(combo));
      result.subsets_checked += first_fail + 1;
      return result;
    }
    result.subsets_checked += static_cast<std::uint64_t>(total);
  }
  result.linked = true;
  return result;
}

LinkedCheck check_k_linked_serial(const Digraph& d, const VertexSet& linked, int k,
                                  std::uint64_t budget) {
  validate_linked_args(d, linked, k, budget);
  const int n = d.n();
  MajorityTester tester(d, linked);
  LinkedCheck result;
  for (int size = 0; size < k && size <= n; ++size) {
    std::vector<Vertex> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      ++result.subsets_checked;
      if (!tester.holds(combo)) {
        result.failing = VertexSet(combo);
        return result;
      }
    } while (next_combination(n, combo));
  }
  result.linked = true;
  return result;
}

bool is_k_linked(const Digraph& d, const VertexSet& linked, int k, std::uint64_t budget, int jobs) {
  return check_k_linked(d, linked, k, budget, jobs).linked;
}

int dtw_lower_bound(const Digraph& d, const LinkedCertificate& cert) {
  if (cert.verified_upto < cert.k || !is_k_linked(d, cert.linked, cert.k)) {
    throw Error(ErrorCode::kUnverifiedCertificate,
                "set is not " + std::to_string(cert.k) + "-linked");
  }
  return cert.k - 1;
}

HavenEvaluator::HavenEvaluator(const Digraph& d, VertexSet linked, int k)
    : d_(&d), linked_(std::move(linked)), k_(k) {
  linked_.check_range(d.n());
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "haven order must be >= 1");
}

VertexSet HavenEvaluator::operator()(const VertexSet& deleted) const {
  deleted.check_range(d_->n());
  if (static_cast<int>(deleted.size()) >= k_) {
    throw Error(ErrorCode::kInvalidArgument, "|S| = " + std::to_string(deleted.size()) +
                                                 " is not below the haven order " + std::to_string(k_));
  }
  MajorityTester tester(*d_, linked_);
  ComponentLabels labels;
  int comp = tester.majority(deleted.vec(), labels);
  if (comp < 0) throw Error(ErrorCode::kNoMajorityComponent, "no SCC holds a majority of L");
  std::vector<Vertex> members;
  for (Vertex v = 0; v < d_->n(); ++v) {
    if (labels.label[v] == comp) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

VertexSet haven_eval(const HavenEvaluator& haven, const VertexSet& deleted) { return haven(deleted); }

bool verify_haven_monotonicity(const HavenEvaluator& haven,
                               const std::vector<std::pair<VertexSet, VertexSet>>& chains) {
  for (const auto& [small, large] : chains) {
    if (!is_subset(small, large)) {
      throw Error(ErrorCode::kInvalidArgument, "chain is not nested");
    }
    if (!is_subset(haven(large), haven(small))) return false;
  }
  return true;
}

UGraph digon_graph(const Digraph& d) {
  std::vector<Arc> edges;
  for (auto [u, v] : d.arcs()) {
    if (u < v && d.has_arc(v, u)) edges.emplace_back(u, v);
  }
  return UGraph::from_edge_list(d.n(), edges);
}

Digraph symmetric_orientation(const UGraph& g) {
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph::from_arc_list(g.n(), arcs);
}

int treewidth_small(const UGraph& g) {
  const int n = g.n();
  if (n > kTreewidthMaxVertices) {
    throw Error(ErrorCode::kCapExceeded, "treewidth oracle limited to " +
                                             std::to_string(kTreewidthMaxVertices) + " vertices");
  }
  if (n == 0) return 0;
  using Mask = std::uint32_t;
  std::vector<Mask> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  }
  // Degree of v once the vertices in `gone` have been eliminated: neighbors
  // outside gone reachable through gone.
  auto fill_degree = [&](Mask gone, Vertex v) {
    Mask reach = adj[v];
    Mask seen = 0;
    Mask frontier = reach & gone;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (seen >> u & 1) continue;
      seen |= Mask{1} << u;
      reach |= adj[u];
      frontier |= adj[u] & gone & ~seen;
    }
    return std::popcount(reach & ~gone & ~(Mask{1} << v));
  };
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> best(std::size_t{1} << n, std::numeric_limits<int>::max());
  best[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      Mask prior = s & ~(Mask{1} << v);
      int width = std::max(best[prior], fill_degree(prior, v));
      best[s] = std::min(best[s], width);
    }
  }
  return std::max(best[full], 0);
}

Theorem2Certificate theorem2_certificate(const Digraph& d, const Theorem2Options& options) {
  auto r = is_regular(d);
  if (!r || *r < 1) throw Error(ErrorCode::kNotRegular, "input is not r-regular with r >= 1");
  const auto params = dtw_bound_params(*r);

  Theorem2Certificate result;
  auto dense = dense_subdigraph(d, *r, params.beta, params.gamma, options.search);
  result.dense = dense.witness;
  const int k = *r / 20 + 1;
  result.certificate.linked = dense.witness.vertices;
  result.certificate.k = k;

  if (check_k_linked(d, result.certificate.linked, k, options.budget, options.jobs).linked) {
    result.certificate.verified_upto = k;
    result.bound = k - 1;
    result.verified = true;
    return result;
  }
  int upto = 0;
  for (int smaller = k - 1; smaller >= 1; --smaller) {
    if (is_k_linked(d, result.certificate.linked, smaller, options.budget, options.jobs)) {
      upto = smaller;
      break;
    }
  }
  result.certificate.verified_upto = upto;
  result.bound = std::max(upto - 1, 0);
  return result;
}

}  // namespace regcyc
