#include "regcyc/density.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>

#include "regcyc/cycles.hpp"
#include "regcyc/dtw.hpp"

namespace regcyc {

void DensityParams::validate() const {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "r must be >= 1");
  if (alpha <= 0 || beta <= 0 || gamma <= 0 || delta <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "density parameters must be positive");
  }
}

DensityParams cycle_bound_params(int r) {
  return {r, make_rational(3, 22), make_rational(3, 11), make_rational(4, 11), make_rational(4, 11)};
}

DensityParams dtw_bound_params(int r) {
  return {r, make_rational(1, 10), make_rational(1, 10), make_rational(3, 10), make_rational(3, 10)};
}

DensityParams dtw_bound_params_second(int r) {
  return {r, make_rational(1, 10), make_rational(3, 20), make_rational(17, 10),
          make_rational(3, 10)};
}

bool is_dense(const Digraph& d, int r, const Rational& beta, const Rational& gamma) {
  const Rational v = d.n();
  const Rational a = static_cast<std::int64_t>(d.arc_count());
  return v >= gamma * r && a >= r * v - beta * r * r;
}

CutThresholds cut_thresholds(int r, const Rational& beta, const Rational& gamma) {
  return {ceil_int(gamma * r), floor_int(beta * r * r)};
}

namespace {

using Mask = std::uint32_t;
constexpr int kMaxExactCap = 30;

// Undirected adjacency multiplicities as masks: arc (u,v) sits in out[u] and
// in[v], so a[X,Y] = sum over x in X of |out[x] & Y| + |in[x] & Y|.
struct MaskGraph {
  std::vector<Mask> out;
  std::vector<Mask> in;

  explicit MaskGraph(const Digraph& d) : out(d.n(), 0), in(d.n(), 0) {
    for (Vertex u = 0; u < d.n(); ++u) {
      for (Vertex v : d.out(u)) {
        out[u] |= Mask{1} << v;
        in[v] |= Mask{1} << u;
      }
    }
  }

  std::size_t cut(Mask x, Mask all) const {
    Mask y = all & ~x;
    std::size_t total = 0;
    for (Mask rest = x; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      total += std::popcount(out[v] & y) + std::popcount(in[v] & y);
    }
    return total;
  }
};

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct ExactSearch {
  const MaskGraph graph;
  int n;
  Mask all;
  CutThresholds limits;

  ExactSearch(const Digraph& d, const CutThresholds& t)
      : graph(d), n(d.n()), all(d.n() == 32 ? ~Mask{0} : (Mask{1} << d.n()) - 1), limits(t) {}

  std::uint64_t space() const { return std::uint64_t{1} << (n - 1); }

  bool violates(std::uint64_t rest) const {
    Mask x = static_cast<Mask>(rest << 1) | 1;
    std::int64_t size_x = std::popcount(x);
    if (size_x < limits.min_side || n - size_x < limits.min_side) return false;
    return static_cast<std::int64_t>(graph.cut(x, all)) <= limits.max_cut;
  }

  Bipartition build(std::uint64_t rest) const {
    Mask x = static_cast<Mask>(rest << 1) | 1;
    std::vector<Vertex> xs, ys;
    for (int v = 0; v < n; ++v) ((x >> v) & 1 ? xs : ys).push_back(v);
    return {VertexSet(std::move(xs)), VertexSet(std::move(ys)), graph.cut(x, all)};
  }

  bool hopeless() const { return n < 2 || n < 2 * limits.min_side; }
};

void check_cap(const Digraph& d, const PartitionSearchOptions& options) {
  int cap = std::min(options.exact_cap, kMaxExactCap);
  if (d.n() > cap) {
    throw Error(ErrorCode::kCapExceeded, "exact partition search limited to " +
                                             std::to_string(cap) + " vertices, got " +
                                             std::to_string(d.n()));
  }
}

std::optional<Bipartition> exact_parallel(const Digraph& d, const CutThresholds& t, int jobs) {
  ExactSearch search(d, t);
  if (search.hopeless()) return std::nullopt;
  const std::int64_t total = static_cast<std::int64_t>(search.space());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::uint64_t best = kNone;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(min : best)
  for (std::int64_t rest = 0; rest < total; ++rest) {
    if (static_cast<std::uint64_t>(rest) < best && search.violates(rest)) best = rest;
  }
  if (best == kNone) return std::nullopt;
  return search.build(best);
}

std::optional<Bipartition> heuristic(const Digraph& d, const CutThresholds& t,
                                     const PartitionSearchOptions& options) {
  const int n = d.n();
  if (n < 2 || n < 2 * t.min_side) return std::nullopt;
  const std::int64_t min_side = std::max<std::int64_t>(t.min_side, 1);
  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> order(n);
  std::vector<char> side(n);

  // Cut change when v switches sides: arcs to its own side become cut, arcs
  // to the other side stop being cut.
  auto gain = [&](Vertex v) {
    std::int64_t same = 0, other = 0;
    for (Vertex w : d.out(v)) (side[w] == side[v] ? same : other) += 1;
    for (Vertex w : d.in(v)) (side[w] == side[v] ? same : other) += 1;
    return same - other;
  };

  for (int attempt = 0; attempt < std::max(options.restarts, 1); ++attempt) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::int64_t> size_dist(min_side, n - min_side);
    std::int64_t size_x = size_dist(rng);
    for (int i = 0; i < n; ++i) side[order[i]] = i < size_x ? 1 : 0;

    bool improved = true;
    while (improved) {
      improved = false;
      for (Vertex v = 0; v < n; ++v) {
        std::int64_t from = side[v] ? size_x : n - size_x;
        if (from - 1 < min_side) continue;
        if (gain(v) < 0) {
          side[v] ^= 1;
          size_x += side[v] ? 1 : -1;
          improved = true;
        }
      }
    }

    std::vector<Vertex> xs, ys;
    for (Vertex v = 0; v < n; ++v) (side[v] == side[0] ? xs : ys).push_back(v);
    VertexSet x(std::move(xs)), y(std::move(ys));
    auto cut = arcs_between(d, x, y).both;
    if (static_cast<std::int64_t>(cut) <= t.max_cut) return Bipartition{x, y, cut};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Bipartition> find_violating_partition(const Digraph& d, int r, const Rational& beta,
                                                    const Rational& gamma,
                                                    const PartitionSearchOptions& options) {
  auto limits = cut_thresholds(r, beta, gamma);
  if (options.mode == SearchMode::kHeuristic) return heuristic(d, limits, options);
  check_cap(d, options);
  return exact_parallel(d, limits, options.jobs);
}

std::optional<Bipartition> find_violating_partition_serial(const Digraph& d, int r,
                                                           const Rational& beta,
                                                           const Rational& gamma) {
  check_cap(d, {});
  ExactSearch search(d, cut_thresholds(r, beta, gamma));
  if (search.hopeless()) return std::nullopt;
  for (std::uint64_t rest = 0; rest < search.space(); ++rest) {
    if (search.violates(rest)) return search.build(rest);
  }
  return std::nullopt;
}

DenseResult dense_subdigraph(const Digraph& d, int r, const Rational& beta, const Rational& gamma,
                             const PartitionSearchOptions& options) {
  if (!is_dense(d, r, beta, gamma)) {
    throw Error(ErrorCode::kNotDense, "input digraph is not (r,beta,gamma)-dense");
  }
  if (options.mode == SearchMode::kExact) check_cap(d, options);

  DenseResult result;
  VertexSet current = VertexSet::range(d.n());
  for (;;) {
    auto sub = induced(d, current);
    auto found = find_violating_partition(sub.graph, r, beta, gamma, options);
    if (!found) {
      result.sub = std::move(sub);
      break;
    }
    auto to_original = [&](const VertexSet& local) {
      std::vector<Vertex> ids;
      for (Vertex v : local) ids.push_back(sub.to_original[v]);
      return VertexSet(std::move(ids));
    };
    DenseStep step{to_original(found->x), to_original(found->y), true};
    bool dense_x = is_dense(induced(d, step.cut_x).graph, r, beta, gamma);
    bool dense_y = is_dense(induced(d, step.cut_y).graph, r, beta, gamma);
    if (!dense_x && !dense_y) {
      throw Error(ErrorCode::kSoundness,
                  "violating partition with neither side dense (cut " + std::to_string(found->cut) + ")");
    }
    step.kept_x = dense_x && (!dense_y || step.cut_x.size() <= step.cut_y.size());
    current = step.kept_x ? step.cut_x : step.cut_y;
    result.witness.steps.push_back(std::move(step));
  }
  result.witness.vertices = current;
  result.witness.verified = options.mode == SearchMode::kExact;
  return result;
}

LemmaCheck check_lemma_preconditions(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta) {
  LemmaCheck check;
  if (alpha <= 0 || beta <= 0 || gamma <= 0 || delta <= 0) return check;
  const Rational h = 1 - alpha / 2;
  const Rational disc = h * h - 2 * beta;
  if (disc <= 0) return check;

  // gamma >= h - sqrt(disc)  <=>  (gamma - h) + sqrt(disc) >= 0
  int gamma_sign = sign_with_root(gamma - h, 1, disc);
  check.gamma_on_boundary = gamma_sign == 0;
  check.part1_ok = gamma_sign >= 0;

  const Rational half = make_rational(1, 2);
  const Rational g = 1 - delta;
  const Rational inner = g * g - beta;
  // 0 < delta < min{1/2, 1 - sqrt(beta)}; the second is (1 - delta) > sqrt(beta).
  bool delta_ok = delta < half && sign_with_root(g, -1, beta) > 0;
  if (!check.part1_ok || !delta_ok || inner < 0) return check;

  // h + sqrt(disc) >= 2 g - 2 sqrt(inner)
  bool lower_ok = sign_with_two_roots(h - 2 * g, 1, disc, 2, inner) >= 0;
  // beta / (1/2 - delta) <= 2 g + 2 sqrt(inner)
  int ratio_sign = sign_with_root(2 * g - beta / (half - delta), 2, inner);
  check.ratio_on_boundary = ratio_sign == 0;
  check.part2_ok = lower_ok && ratio_sign >= 0;
  return check;
}

Threshold min_vertex_threshold(int r, const Rational& alpha, const Rational& beta) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "r must be >= 1");
  const Rational h = 1 - alpha / 2;
  const Rational disc = h * h - 2 * beta;
  if (disc < 0) {
    throw Error(ErrorCode::kInvalidArgument, "2*beta exceeds (1 - alpha/2)^2");
  }
  Threshold t;
  Rational root;
  if (rational_sqrt(disc, root)) {
    t.lo = t.hi = (h + root) * r;
    t.exact = true;
    return t;
  }
  Rational lo, hi;
  sqrt_enclosure(disc, Rational(BigInt(1), BigInt("1000000000000")), lo, hi);
  t.lo = (h + lo) * r;
  t.hi = (h + hi) * r;
  return t;
}

bool exceeds_vertex_threshold(std::int64_t vertices, int r, const Rational& alpha,
                              const Rational& beta) {
  const Rational h = 1 - alpha / 2;
  const Rational disc = h * h - 2 * beta;
  if (disc < 0) throw Error(ErrorCode::kInvalidArgument, "2*beta exceeds (1 - alpha/2)^2");
  // vertices - h r - r sqrt(disc) > 0
  return sign_with_root(Rational(vertices) - h * r, -Rational(r), disc) > 0;
}

std::optional<Vertex> high_degree_vertex(const Digraph& d, int r, const Rational& delta) {
  const std::int64_t need = ceil_int(delta * r);
  for (Vertex v = 0; v < d.n(); ++v) {
    if (d.out_degree(v) >= need && d.in_degree(v) >= need) return v;
  }
  return std::nullopt;
}

DensityBoundReport density_bound_report(const Digraph& d, bool full, int jobs) {
  DensityBoundReport report;
  report.arcs = d.arc_count();
  report.vertices = d.n();
  report.c = c_number(d, jobs).c;
  report.min_term = report.c;
  if (full) {
    if (d.n() > kDensityBoundFullCap) {
      throw Error(ErrorCode::kCapExceeded, "full density bound check limited to " +
                                               std::to_string(kDensityBoundFullCap) + " vertices");
    }
    report.digon_treewidth = treewidth_small(digon_graph(d));
    report.min_term = std::min(report.c, 2 * *report.digon_treewidth);
  }
  const std::int64_t v = report.vertices;
  report.holds = 2 * static_cast<std::int64_t>(report.arcs) < v * (v + report.min_term);
  return report;
}

bool density_bound_check(const Digraph& d, bool full) { return density_bound_report(d, full).holds; }

}  // namespace regcyc
