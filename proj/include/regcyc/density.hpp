#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regcyc/digraph.hpp"
#include "regcyc/rational.hpp"

namespace regcyc {

/// Parameter tuple for the density machinery. All entries positive.
struct DensityParams {
  int r = 1;
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;

  void validate() const;
};

/// Parameters used for the c(D) >= ceil(3r/22) argument.
DensityParams cycle_bound_params(int r);
/// Parameters used for the dtw(D) >= floor(r/20) argument, first stage.
DensityParams dtw_bound_params(int r);
/// Second stage of the dtw argument, after deleting a small separator.
DensityParams dtw_bound_params_second(int r);

/// v(D) >= gamma*r and a(D) >= r*v(D) - beta*r^2, compared exactly.
bool is_dense(const Digraph& d, int r, const Rational& beta, const Rational& gamma);

enum class SearchMode { kExact, kHeuristic };

struct PartitionSearchOptions {
  SearchMode mode = SearchMode::kExact;
  int exact_cap = 20;
  std::uint64_t seed = 0;
  int restarts = 32;
  int jobs = 0;  // 0: OpenMP default
};

/// A partition (X, Y) of the vertex set with its undirected cut a[X,Y].
struct Bipartition {
  VertexSet x;
  VertexSet y;
  std::size_t cut = 0;
};

/// Integer forms of the side-size and cut thresholds.
struct CutThresholds {
  std::int64_t min_side;  // ceil(gamma r)
  std::int64_t max_cut;   // floor(beta r^2)
};
CutThresholds cut_thresholds(int r, const Rational& beta, const Rational& gamma);

/// A partition with both sides >= gamma*r and a[X,Y] <= beta*r^2. Exact mode
/// searches every bipartition (X always holds vertex 0) and returns the one
/// whose membership mask over vertices 1..n-1 is smallest; heuristic mode
/// runs seeded multi-start local search and may miss violations.
std::optional<Bipartition> find_violating_partition(const Digraph& d, int r, const Rational& beta,
                                                    const Rational& gamma,
                                                    const PartitionSearchOptions& options = {});

/// Single-threaded exact reference for the search above.
std::optional<Bipartition> find_violating_partition_serial(const Digraph& d, int r,
                                                           const Rational& beta,
                                                           const Rational& gamma);

struct DenseStep {
  VertexSet cut_x;  // original ids
  VertexSet cut_y;
  bool kept_x = true;
};

struct DenseWitness {
  VertexSet vertices;  // original ids of D'
  bool verified = false;
  std::vector<DenseStep> steps;
};

struct DenseResult {
  InducedSubdigraph sub;
  DenseWitness witness;
};

/// Descends through violating partitions, keeping a dense side each time
/// (the smaller one if both are dense, X on ties) until none is left.
DenseResult dense_subdigraph(const Digraph& d, int r, const Rational& beta, const Rational& gamma,
                             const PartitionSearchOptions& options = {});

struct LemmaCheck {
  bool part1_ok = false;
  bool part2_ok = false;
  // gamma == (1 - a/2) - sqrt((1 - a/2)^2 - 2b) exactly
  bool gamma_on_boundary = false;
  // b / (1/2 - d) == 2((1 - d) + sqrt((1 - d)^2 - b)) exactly
  bool ratio_on_boundary = false;
};

/// Evaluates the degree/size lemma's hypotheses with exact arithmetic.
LemmaCheck check_lemma_preconditions(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta);

/// ((1 - a/2) + sqrt((1 - a/2)^2 - 2b)) * r, exactly when the root is
/// rational, otherwise as an enclosure of width <= 1e-12 * r.
struct Threshold {
  Rational lo;
  Rational hi;
  bool exact = false;
};
Threshold min_vertex_threshold(int r, const Rational& alpha, const Rational& beta);

/// vertices > ((1 - a/2) + sqrt((1 - a/2)^2 - 2b)) * r, decided exactly.
bool exceeds_vertex_threshold(std::int64_t vertices, int r, const Rational& alpha,
                              const Rational& beta);

/// Lowest vertex with both degrees >= delta*r.
std::optional<Vertex> high_degree_vertex(const Digraph& d, int r, const Rational& delta);

struct DensityBoundReport {
  std::size_t arcs = 0;
  int vertices = 0;
  int c = 0;
  std::optional<int> digon_treewidth;  // set in full mode
  int min_term = 0;                    // min{c, 2 tw} or c
  bool holds = false;                  // 2a < v (v + min_term)
};

/// Largest n for which the full check (with treewidth) runs.
inline constexpr int kDensityBoundFullCap = 12;

DensityBoundReport density_bound_report(const Digraph& d, bool full, int jobs = 0);
bool density_bound_check(const Digraph& d, bool full = true);

}  // namespace regcyc
