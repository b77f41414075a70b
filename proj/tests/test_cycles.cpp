#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "regcyc/constructions.hpp"
#include "regcyc/cycles.hpp"

using namespace regcyc;

TEST_CASE("small c values") {
  CHECK(c_number(directed_cycle(5)).c == 1);
  CHECK(c_number(complete_biorientation(4)).c == 3);
  CHECK(c_number(directed_path(4)).c == 0);
  auto glued = Digraph::from_arc_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto result = c_number(glued);
  CHECK(result.c == 2);
  CHECK(result.best.hub == 0);
  CHECK(verify_cycle_packing(glued, result.best));
}

TEST_CASE("packing at a fixed hub") {
  auto k4 = complete_biorientation(4);
  auto packing = cycles_through(k4, 2);
  CHECK(packing.size() == 3);
  CHECK(verify_cycle_packing(k4, packing));
  CHECK(cycles_through(directed_path(3), 1).size() == 0);
}

TEST_CASE("packing verifier rejects overlaps and non-cycles") {
  auto k4 = complete_biorientation(4);
  CyclePacking bad{0, {{0, 1, 0}, {0, 1, 2, 0}}};
  CHECK_FALSE(verify_cycle_packing(k4, bad));
  CyclePacking open{0, {{0, 1, 2}}};
  CHECK_FALSE(verify_cycle_packing(k4, open));
  CyclePacking missing{0, {{0, 1, 2, 0}}};
  CHECK_FALSE(verify_cycle_packing(directed_cycle(4), missing));
}

TEST_CASE("flow route agrees with both exhaustive routes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    auto d = oracle::random_digraph(n, 0.2 + 0.1 * (trial % 5), rng);
    const int c = c_number(d).c;
    CAPTURE(trial);
    CHECK(c == c_brute_force(d));
    CHECK(c == oracle::c_by_cycle_families(d));
  }
}

TEST_CASE("parallel and serial hub scans agree") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    auto d = oracle::random_digraph(14, 0.25, rng);
    auto par = c_number(d, 3);
    auto ser = c_number_serial(d);
    CHECK(par.c == ser.c);
    CHECK(par.best.hub == ser.best.hub);
    CHECK(par.best.cycles == ser.best.cycles);
  }
}

TEST_CASE("c(D) is bounded by min degree at the hub and by r on regular digraphs") {
  for (const auto& entry : corpus::build()) {
    auto result = c_number(entry.graph);
    CAPTURE(entry.name);
    CHECK(verify_cycle_packing(entry.graph, result.best));
    const Vertex hub = result.best.hub;
    if (result.c > 0) {
      CHECK(result.c <= static_cast<int>(std::min(entry.graph.out_degree(hub), entry.graph.in_degree(hub))));
    }
    if (auto r = is_regular(entry.graph)) {
      CHECK(cycle_lower_bound(*r) <= result.c);
      CHECK(result.c <= *r);
    }
  }
}

TEST_CASE("lower bound arithmetic") {
  CHECK(cycle_lower_bound(1) == 1);
  CHECK(cycle_lower_bound(7) == 1);
  CHECK(cycle_lower_bound(8) == 2);
  CHECK(cycle_lower_bound(22) == 3);
  CHECK(cycle_lower_bound(23) == 4);
}

TEST_CASE("guaranteed packing") {
  auto k5 = complete_biorientation(5);
  auto packing = guaranteed_packing(k5);
  CHECK(packing.hub == 0);
  CHECK(packing.size() >= 1);
  CHECK(verify_cycle_packing(k5, packing));
  CHECK_THROWS_AS(guaranteed_packing(directed_path(3)), Error);
}

TEST_CASE("trace on small regular digraphs") {
  for (int r = 1; r <= 4; ++r) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto d = random_regular_digraph(12, r, seed);
      auto report = theorem1_trace(d);
      CHECK(report.bound == cycle_lower_bound(r));
      CHECK(report.bound_met);
      CHECK(report.dense.verified);
      CHECK(verify_cycle_packing(d, report.packing));
    }
  }
  auto k4 = complete_biorientation(4);
  auto report = theorem1_trace(k4);
  CHECK(report.packing.size() >= 1);
  CHECK(report.bound_met);
}
