#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "regcyc/density.hpp"
#include "regcyc/digraph.hpp"

namespace regcyc {

/// L is k-linked when deleting any fewer than k vertices leaves a strongly
/// connected component holding more than half of L. Such an L certifies
/// dtw(D) >= k - 1.
struct LinkedCertificate {
  VertexSet linked;
  int k = 1;
  int verified_upto = 0;  // largest k' <= k checked exhaustively

  int bound() const { return k - 1; }
};

struct LinkedCheck {
  bool linked = false;
  std::optional<VertexSet> failing;  // smallest failing S by size, then lex
  std::uint64_t subsets_checked = 0;
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 20'000'000;

/// Sum over i < k of C(n, i), saturating.
std::uint64_t deletion_sets_below(int n, int k);

/// Exhaustive check over every S with |S| < k. Each size level is sharded
/// across threads; the reported failure is the same for any thread count.
LinkedCheck check_k_linked(const Digraph& d, const VertexSet& linked, int k,
                           std::uint64_t budget = kDefaultSubsetBudget, int jobs = 0);
LinkedCheck check_k_linked_serial(const Digraph& d, const VertexSet& linked, int k,
                                  std::uint64_t budget = kDefaultSubsetBudget);
bool is_k_linked(const Digraph& d, const VertexSet& linked, int k,
                 std::uint64_t budget = kDefaultSubsetBudget, int jobs = 0);

/// k - 1 once the certificate has been verified up to k.
int dtw_lower_bound(const Digraph& d, const LinkedCertificate& cert);

/// The haven induced by a k-linked set: S maps to the SCC of D - S holding
/// a majority of L. Evaluated on demand.
class HavenEvaluator {
 public:
  HavenEvaluator(const Digraph& d, VertexSet linked, int k);
  HavenEvaluator(Digraph&&, VertexSet, int) = delete;

  VertexSet operator()(const VertexSet& deleted) const;

  const Digraph& digraph() const { return *d_; }
  const VertexSet& linked() const { return linked_; }
  int order() const { return k_; }

 private:
  const Digraph* d_;
  VertexSet linked_;
  int k_;
};

VertexSet haven_eval(const HavenEvaluator& haven, const VertexSet& deleted);

/// rho(S) contains rho(S') for every supplied S subset of S'.
bool verify_haven_monotonicity(const HavenEvaluator& haven,
                               const std::vector<std::pair<VertexSet, VertexSet>>& chains);

/// Undirected graph of the digons of D.
UGraph digon_graph(const Digraph& d);
/// Both orientations of every edge.
Digraph symmetric_orientation(const UGraph& g);

inline constexpr int kTreewidthMaxVertices = 12;

/// Exact treewidth by dynamic programming over elimination prefixes.
int treewidth_small(const UGraph& g);

struct Theorem2Certificate {
  LinkedCertificate certificate;
  DenseWitness dense;
  int bound = 0;  // floor(r/20) when verified, otherwise verified_upto - 1 floored at 0
  bool verified = false;
};

struct Theorem2Options {
  PartitionSearchOptions search;
  std::uint64_t budget = kDefaultSubsetBudget;
  int jobs = 0;
};

/// L := V(D'), k := floor(r/20) + 1, checked exhaustively in D.
Theorem2Certificate theorem2_certificate(const Digraph& d, const Theorem2Options& options = {});

}  // namespace regcyc
