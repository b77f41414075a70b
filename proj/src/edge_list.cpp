#include "regcyc/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace regcyc {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

// Exactly two non-negative integers separated by a single space.
std::pair<long long, long long> parse_pair(const std::string& text, int line) {
  auto space = text.find(' ');
  if (space == std::string::npos || text.find(' ', space + 1) != std::string::npos) {
    fail(line, "expected two integers separated by one space");
  }
  auto parse_one = [&](std::string_view part) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || value < 0) {
      fail(line, "bad integer '" + std::string(part) + "'");
    }
    return value;
  };
  std::string_view view(text);
  return {parse_one(view.substr(0, space)), parse_one(view.substr(space + 1))};
}

}  // namespace

AnyGraph read_edge_list(std::istream& in) {
  std::string text;
  int line = 0;
  bool undirected = false;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Arc> arcs;
  std::set<std::pair<long long, long long>> seen;

  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (!text.empty() && text.front() == '#') continue;
    if (!have_header) {
      if (text == "u" && !undirected) {
        undirected = true;
        continue;
      }
      std::tie(n, m) = parse_pair(text, line);
      if (n > (1 << 24)) fail(line, "vertex count too large");
      have_header = true;
      arcs.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(arcs.size()) == m) {
      if (text.empty()) continue;
      fail(line, "more than " + std::to_string(m) + " arc lines");
    }
    auto [u, v] = parse_pair(text, line);
    if (u >= n || v >= n) fail(line, "vertex id out of range");
    if (u == v) fail(line, "loop at vertex " + std::to_string(u));
    std::pair<long long, long long> key{u, v};
    if (undirected && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second) fail(line, "repeated arc " + std::to_string(u) + " " + std::to_string(v));
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) fail(line, "missing 'n m' header");
  if (static_cast<long long>(arcs.size()) != m) {
    fail(line, "expected " + std::to_string(m) + " arc lines, found " + std::to_string(arcs.size()));
  }
  try {
    if (undirected) return UGraph::from_edge_list(static_cast<int>(n), arcs);
    return Digraph::from_arc_list(static_cast<int>(n), arcs);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Digraph read_digraph(std::istream& in) {
  auto g = read_edge_list(in);
  if (!std::holds_alternative<Digraph>(g)) {
    throw Error(ErrorCode::kParse, "expected a digraph, found an undirected graph");
  }
  return std::get<Digraph>(std::move(g));
}

UGraph read_ugraph(std::istream& in) {
  auto g = read_edge_list(in);
  if (!std::holds_alternative<UGraph>(g)) {
    throw Error(ErrorCode::kParse, "expected an undirected graph (missing 'u' line)");
  }
  return std::get<UGraph>(std::move(g));
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_digraph(in);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.n() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

void write_edge_list(std::ostream& out, const UGraph& g) {
  out << "u\n" << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  write_edge_list(out, d);
  return out.str();
}

void write_dot(std::ostream& out, const Digraph& d) {
  out << "digraph D {\n";
  for (Vertex v = 0; v < d.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
}

}  // namespace regcyc
