#pragma once

#include <iosfwd>
#include <functional>
#include <string>
#include <string_view>

#include "minorlab/errors.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// graph6: printable encoding of simple graphs. N(n) followed by the upper
// triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed 6 bits per byte, +63.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header. parse_error carries byte offsets.
Graph from_graph6(std::string_view line);

// Plain text: "n m" header line, then m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);

// Autodetects edge-list vs graph6 content (edge lists start with a digit,
// graph6 bytes are all >= 63).
Graph read_graph_file(const std::string& path);
Graph parse_graph(std::string_view text);

// One graph per line; `offset`/`line` in errors refer to the whole stream.
// Returns the number of graphs emitted.
std::size_t for_each_graph6(std::istream& in, const std::function<void(Graph)>& emit);

} // namespace minorlab
