#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "regcyc/constructions.hpp"
#include "regcyc/digraph.hpp"

using namespace regcyc;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("from_arc_list builds and rejects malformed arc lists") {
  auto digon = Digraph::from_arc_list(2, {{0, 1}, {1, 0}});
  CHECK(digon.n() == 2);
  CHECK(digon.arc_count() == 2);
  CHECK(digon.has_arc(0, 1));
  CHECK(digon.has_arc(1, 0));

  CHECK(code_of([] { Digraph::from_arc_list(2, {{0, 0}}); }) == ErrorCode::kLoopArc);
  CHECK(code_of([] { Digraph::from_arc_list(3, {{0, 1}, {0, 1}}); }) == ErrorCode::kDuplicateArc);
  CHECK(code_of([] { Digraph::from_arc_list(3, {{0, 3}}); }) == ErrorCode::kVertexOutOfRange);

  try {
    Digraph::from_arc_list(3, {{1, 2}, {1, 2}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("is_regular and is_eulerian") {
  CHECK(is_regular(complete_biorientation(4)) == 3);
  CHECK(is_regular(directed_cycle(3)) == 1);
  CHECK_FALSE(is_regular(directed_path(3)).has_value());

  CHECK(is_eulerian(random_regular_digraph(10, 3, 1)));
  CHECK_FALSE(is_eulerian(directed_path(2)));
  CHECK(is_eulerian(directed_cycle(4)));
}

TEST_CASE("induced subdigraphs relabel stably") {
  auto k4 = complete_biorientation(4);
  auto pair = induced(k4, {0, 1});
  CHECK(pair.graph == Digraph::from_arc_list(2, {{0, 1}, {1, 0}}));
  CHECK(pair.to_original == std::vector<Vertex>{0, 1});

  CHECK(induced(k4, VertexSet::range(4)).graph == k4);

  auto chords = induced(directed_cycle(4), {0, 2});
  CHECK(chords.graph.n() == 2);
  CHECK(chords.graph.arc_count() == 0);
  CHECK(chords.to_local[2] == 1);
  CHECK(chords.to_local[1] == -1);

  CHECK(code_of([&] { induced(k4, {7}); }) == ErrorCode::kVertexOutOfRange);
}

TEST_CASE("strongly connected components") {
  auto cycle_parts = scc(directed_cycle(4));
  REQUIRE(cycle_parts.size() == 1);
  CHECK(cycle_parts[0].size() == 4);

  auto path_parts = scc(directed_path(3));
  CHECK(path_parts == std::vector<VertexSet>{{0}, {1}, {2}});

  auto digon = Digraph::from_arc_list(2, {{0, 1}, {1, 0}});
  auto joined = join_construction(digon, digon);
  CHECK(scc(joined) == std::vector<VertexSet>{{0, 1}, {2, 3}});
}

TEST_CASE("reverse is an involution") {
  auto digon = Digraph::from_arc_list(2, {{0, 1}, {1, 0}});
  CHECK(reverse(digon) == digon);
  CHECK(reverse(directed_path(3)) == Digraph::from_arc_list(3, {{2, 1}, {1, 0}}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = oracle::random_digraph(9, 0.3, rng);
    CHECK(reverse(reverse(d)) == d);
    CHECK(scc(reverse(d)) == scc(d));
  }
}

TEST_CASE("arcs_between counts one-way and two-way arcs") {
  auto k4 = complete_biorientation(4);
  auto counts = arcs_between(k4, {0, 1}, {2, 3});
  CHECK(counts.forward == 4);
  CHECK(counts.both == 8);

  auto c4 = directed_cycle(4);
  counts = arcs_between(c4, {0, 1}, {2, 3});
  CHECK(counts.forward == 1);
  CHECK(counts.both == 2);

  counts = arcs_between(k4, {0, 1}, {});
  CHECK(counts.forward == 0);
  CHECK(counts.both == 0);

  CHECK(code_of([&] { arcs_between(k4, {0, 1}, {1, 2}); }) == ErrorCode::kOverlappingSets);
}

TEST_CASE("degree sums, cut decomposition and Eulerian cut balance") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const bool regular = trial % 2 == 0;
    auto d = regular ? random_regular_digraph(12, 1 + trial % 4, trial) : oracle::random_digraph(10, 0.35, rng);
    std::size_t out_sum = 0, in_sum = 0;
    for (Vertex v = 0; v < d.n(); ++v) {
      out_sum += d.out_degree(v);
      in_sum += d.in_degree(v);
    }
    CHECK(out_sum == d.arc_count());
    CHECK(in_sum == d.arc_count());

    auto x = oracle::random_subset(d.n(), rng, 0.5);
    auto y = set_difference(VertexSet::range(d.n()), x);
    auto counts = arcs_between(d, x, y);
    CHECK(induced(d, x).graph.arc_count() + induced(d, y).graph.arc_count() + counts.both == d.arc_count());
    if (regular) CHECK(counts.forward == arcs_between(d, y, x).forward);
  }
}

TEST_CASE("girth") {
  CHECK(girth(directed_cycle(5)) == 5);
  CHECK(girth(complete_biorientation(3)) == 2);
  CHECK_FALSE(girth(directed_path(4)).has_value());
}

TEST_CASE("undirected graphs reject loops and repeated edges") {
  CHECK(code_of([] { UGraph::from_edge_list(3, {{0, 1}, {1, 0}}); }) == ErrorCode::kDuplicateArc);
  CHECK(code_of([] { UGraph::from_edge_list(3, {{2, 2}}); }) == ErrorCode::kLoopArc);
  auto g = UGraph::from_edge_list(3, {{2, 0}, {0, 1}});
  CHECK(g.edges() == std::vector<Arc>{{0, 1}, {0, 2}});
  CHECK(g.degree(0) == 2);
}
