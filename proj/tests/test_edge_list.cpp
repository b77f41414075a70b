#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "regcyc/edge_list.hpp"

using namespace regcyc;

namespace {

std::string parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("reads comments, header and arcs") {
  std::istringstream in("# a digon\n2 2\n1 0\n0 1\n");
  auto d = read_digraph(in);
  CHECK(d == Digraph::from_arc_list(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("writer sorts arcs lexicographically") {
  auto d = Digraph::from_arc_list(3, {{2, 0}, {0, 2}, {0, 1}});
  CHECK(to_edge_list(d) == "3 3\n0 1\n0 2\n2 0\n");
}

TEST_CASE("undirected flag line") {
  std::istringstream in("u\n3 2\n0 1\n1 2\n");
  auto g = read_ugraph(in);
  CHECK(g.edge_count() == 2);
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == "u\n3 2\n0 1\n1 2\n");
}

TEST_CASE("malformed input reports the line") {
  CHECK(parse_error("2 1\n0  1\n").find("line 2") != std::string::npos);
  CHECK(parse_error("2 2\n0 1\n").find("expected 2 arc lines") != std::string::npos);
  CHECK(parse_error("2 1\n0 1\n1 0\n").find("line 3") != std::string::npos);
  CHECK(parse_error("2 1\n0 5\n").find("line 2") != std::string::npos);
  CHECK(parse_error("2 1\n0 0\n").find("loop") != std::string::npos);
  CHECK(parse_error("# only comments\n").find("header") != std::string::npos);
  CHECK(parse_error("x y\n").find("line 1") != std::string::npos);
}

TEST_CASE("write then read is the identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto d = oracle::random_digraph(1 + trial % 12, 0.3, rng);
    std::istringstream in(to_edge_list(d));
    CHECK(read_digraph(in) == d);
  }
}
