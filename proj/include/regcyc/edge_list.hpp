#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "regcyc/digraph.hpp"

namespace regcyc {

// Text format: `#` lines are comments; an optional `u` line marks an
// undirected graph; then `n m`; then exactly m lines `u v`. Writers sort.

using AnyGraph = std::variant<Digraph, UGraph>;

/// Parses either flavor. Malformed input throws kParse with the line number.
AnyGraph read_edge_list(std::istream& in);
Digraph read_digraph(std::istream& in);
UGraph read_ugraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Digraph& d);
void write_edge_list(std::ostream& out, const UGraph& g);
std::string to_edge_list(const Digraph& d);

void write_dot(std::ostream& out, const Digraph& d);

}  // namespace regcyc
