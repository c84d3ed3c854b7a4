#ifndef LINKLESS_GRAPH_IO_HPP
#define LINKLESS_GRAPH_IO_HPP

#include "linkless/graph.hpp"

#include <string>
#include <string_view>

namespace linkless {

/// graph6: one byte n+63, then the upper triangle column by column
/// (x01, x02, x12, x03, ...), six bits per byte, big-endian, zero padded,
/// each group offset by 63.
auto to_graph6(const Graph & g) -> std::string;

/// Throws ParseError naming the offending byte offset.
auto from_graph6(std::string_view text) -> Graph;

/// Plain text: "n m" then m lines "u v", 0-indexed.
auto to_edge_list(const Graph & g) -> std::string;
auto from_edge_list(std::string_view text) -> Graph;

} // namespace linkless

#endif
