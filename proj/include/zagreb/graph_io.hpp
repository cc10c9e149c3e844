#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Decodes one graph6 line: size prefix N(n) (n+63 for n <= 62, or '~' plus
/// three bytes for 63 <= n <= 258047), then the upper-triangle adjacency bits
/// in column order, packed 6 per byte with offset 63. Strict: bytes outside
/// [63,126], short bodies, extra bytes and nonzero padding bits are rejected.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding; parse_graph6(write_graph6(g)) == g and writing
/// a parsed canonical line reproduces it byte for byte. Requires n <= 258047.
std::string write_graph6(const Graph& g);

/// Edge-list format: header line "n m", then m lines "u v" with 0-based
/// endpoints. The explicit header makes isolated vertices representable.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

/// Single-line rendering "n m u1 v1 u2 v2 ..." with edges in canonical order;
/// used for graph lists inside reports.
std::string edge_list_line(const Graph& g);

/// Streams a graph6 corpus: one graph per line, blank lines skipped, an
/// optional ">>graph6<<" prefix tolerated. Errors gain a line number.
void for_each_graph6_line(std::istream& in,
                          const std::function<void(const Graph&, long long line_no)>& fn);

}  // namespace zagreb
