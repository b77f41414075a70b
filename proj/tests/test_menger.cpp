#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "regcyc/constructions.hpp"
#include "regcyc/menger.hpp"

using namespace regcyc;

TEST_CASE("single vertex separator") {
  // u0 -> x -> w0, u1 -> x -> w1
  auto d = Digraph::from_arc_list(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  auto result = max_disjoint_paths(d, {0, 1}, {3, 4});
  CHECK(result.family.size() == 1);
  CHECK(result.separator.cut == VertexSet{2});
  CHECK(verify_path_family(d, {0, 1}, {3, 4}, result.family));
  CHECK(verify_separator(d, {0, 1}, {3, 4}, result.separator));
}

TEST_CASE("overlapping terminal sets give one-vertex paths") {
  auto d = Digraph::from_arc_list(3, {{0, 2}});
  auto result = max_disjoint_paths(d, {0, 1}, {1, 2});
  CHECK(result.family.size() == 2);
  CHECK(verify_path_family(d, {0, 1}, {1, 2}, result.family));
  CHECK(max_disjoint_paths(directed_path(3), {0, 1}, {1, 2}).family.size() == 1);
}

TEST_CASE("no path at all") {
  auto d = directed_path(3);
  auto result = max_disjoint_paths(d, {2}, {0});
  CHECK(result.family.size() == 0);
  CHECK(result.separator.cut.empty());
  CHECK(verify_separator(d, {2}, {0}, result.separator));
}

TEST_CASE("empty terminal sets are rejected") {
  auto d = directed_path(3);
  CHECK_THROWS_AS(max_disjoint_paths(d, {}, {0}), Error);
  CHECK_THROWS_AS(max_disjoint_paths(d, {0}, {}), Error);
}

TEST_CASE("two triangles glued at a vertex") {
  auto d = Digraph::from_arc_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto result = separate_neighborhoods(d, 0);
  CHECK(result.family.size() == 2);
  for (const auto& path : result.family.paths) {
    for (Vertex v : path) CHECK(v != 0);
  }
}

TEST_CASE("duality against brute-force separators") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 10;
    auto d = oracle::random_digraph(n, 0.25, rng);
    auto u = oracle::random_subset(n, rng, 0.3);
    auto w = oracle::random_subset(n, rng, 0.3);
    if (u.empty() || w.empty()) continue;
    auto result = max_disjoint_paths(d, u, w);
    CAPTURE(trial);
    CHECK(result.family.size() == result.separator.cut.size());
    CHECK(static_cast<int>(result.family.size()) == oracle::min_separator_brute(d, u, w));
    CHECK(static_cast<int>(result.family.size()) == oracle::max_disjoint_paths_brute(d, u, w));
    CHECK(verify_path_family(d, u, w, result.family));
    CHECK(verify_separator(d, u, w, result.separator));
  }
}

TEST_CASE("relabelling leaves the path count unchanged") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 8;
    auto d = oracle::random_digraph(n, 0.3, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> u2, w2;
    for (Vertex v : VertexSet{0, 1, 2}) u2.push_back(perm[v]);
    for (Vertex v : VertexSet{5, 6, 7}) w2.push_back(perm[v]);
    auto a = max_disjoint_paths(d, {0, 1, 2}, {5, 6, 7});
    auto b = max_disjoint_paths(oracle::relabel(d, perm), VertexSet(u2), VertexSet(w2));
    CHECK(a.family.size() == b.family.size());
  }
}

TEST_CASE("tampered witnesses are rejected") {
  auto d = Digraph::from_arc_list(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  auto result = max_disjoint_paths(d, {0, 1}, {3, 4});
  auto family = result.family;
  family.paths.push_back({1, 2, 4});
  CHECK_FALSE(verify_path_family(d, {0, 1}, {3, 4}, family));
  family = result.family;
  family.paths[0].push_back(0);
  CHECK_FALSE(verify_path_family(d, {0, 1}, {3, 4}, family));
  auto sep = result.separator;
  sep.cut = VertexSet{};
  CHECK_FALSE(verify_separator(d, {0, 1}, {3, 4}, sep));
}
