#include <doctest.h>

#include "corpus.hpp"
#include "regcyc/constructions.hpp"
#include "regcyc/cycles.hpp"

using namespace regcyc;

TEST_CASE("walls") {
  auto w1 = cylindrical_wall(1).graph;
  CHECK(w1.arc_count() == 4);
  CHECK(scc(w1).size() == 1);
  CHECK(girth(w1) == 4);
  CHECK(is_regular(w1) == 1);
  CHECK(cylindrical_wall(2).graph.arc_count() == 20);

  for (int k = 1; k <= 8; ++k) {
    auto wall = cylindrical_wall(k);
    const auto& d = wall.graph;
    CAPTURE(k);
    CHECK(d.n() == 4 * k * k);
    CHECK(d.arc_count() == static_cast<std::size_t>(2 * k * (2 * k - 1) + 2 * k * k));
    CHECK(scc(d).size() == 1);
    for (Vertex v = 0; v < d.n(); ++v) {
      CHECK(d.out_degree(v) + d.in_degree(v) <= 3);
      CHECK(d.out_degree(v) >= 1);
      CHECK(d.in_degree(v) >= 1);
      auto [x, y] = wall.coords.coords(v);
      CHECK(wall.coords.id(x, y) == v);
    }
  }
  CHECK_THROWS_AS(cylindrical_wall(0), Error);
}

TEST_CASE("blow-ups") {
  auto b = blow_up(directed_cycle(3), 2);
  CHECK(b.n() == 6);
  CHECK(b.arc_count() == 12);
  CHECK(is_regular(b) == 2);
  CHECK(c_number(b).c == 2);
  CHECK(blow_up(complete_biorientation(3), 1) == complete_biorientation(3));
  CHECK(b.has_arc(0 * 2 + 1, 1 * 2 + 0));
  CHECK_THROWS_AS(blow_up(directed_cycle(3), 0), Error);

  for (const auto& entry : corpus::build()) {
    auto r = corpus::regular_degree(entry.graph);
    if (!r || entry.graph.n() > 8) continue;
    const int c = c_number(entry.graph).c;
    for (int factor = 1; factor <= 4; ++factor) {
      auto big = blow_up(entry.graph, factor);
      CAPTURE(entry.name);
      CHECK(is_regular(big) == *r * factor);
      if (factor <= 3 && *r <= 3) CHECK(c_number(big).c <= c * factor);
    }
  }
}

TEST_CASE("complete biorientation") {
  CHECK(complete_biorientation(2) == Digraph::from_arc_list(2, {{0, 1}, {1, 0}}));
  CHECK(complete_biorientation(4).arc_count() == 12);
  CHECK(is_regular(complete_biorientation(4)) == 3);
  for (int n = 2; n <= 7; ++n) CHECK(c_number(complete_biorientation(n)).c == n - 1);
}

TEST_CASE("join") {
  auto digon = complete_biorientation(2);
  auto joined = join_construction(digon, digon);
  CHECK(joined.n() == 4);
  CHECK(joined.arc_count() == 8);
  CHECK(scc(joined).size() == 2);

  auto lone = Digraph::from_arc_list(1, {});
  auto pair = join_construction(lone, lone);
  CHECK(pair.arcs() == std::vector<Arc>{{1, 0}});
  CHECK(scc(pair).size() == 2);

  auto first = directed_cycle(3);
  auto second = complete_biorientation(3);
  auto both = join_construction(first, second);
  for (Vertex v = 0; v < 3; ++v) {
    CHECK(both.in_degree(v) == first.in_degree(v) + 3);
    CHECK(both.out_degree(v + 3) == second.out_degree(v) + 3);
  }

  auto entries = corpus::build();
  for (std::size_t i = 0; i + 1 < entries.size(); i += 7) {
    const auto& a = entries[i].graph;
    const auto& b = entries[i + 1].graph;
    auto j = join_construction(a, b);
    CHECK(scc(j).size() == scc(a).size() + scc(b).size());
  }
}

TEST_CASE("random regular digraphs") {
  CHECK(is_regular(random_regular_digraph(6, 2, 9)) == 2);
  CHECK(random_regular_digraph(20, 5, 3) == random_regular_digraph(20, 5, 3));
  CHECK_THROWS_AS(random_regular_digraph(4, 4, 1), Error);
  CHECK_THROWS_AS(random_regular_digraph(4, 0, 1), Error);
  for (int n = 2; n <= 14; ++n) {
    for (int r = 1; r < n; ++r) CHECK(is_regular(random_regular_digraph(n, r, n * r)) == r);
  }
}
