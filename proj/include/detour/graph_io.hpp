#ifndef DETOUR_GRAPH_IO_HPP
#define DETOUR_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "detour/graph.hpp"

namespace detour {

// Parses the native text format
//     n m directed|undirected
//     u v            (m lines, 0-based)
// or DIMACS (`c` comments, `p edge n m`, `e u v` with 1-based ids, always
// undirected). The format is sniffed from the first non-blank line. Errors
// carry <source>:<line> positions; duplicate edges are rejected.
Graph parse_graph(std::istream& in, const std::string& source_name = "<input>");
Graph parse_graph_string(const std::string& text, const std::string& source_name = "<input>");
Graph load_graph_file(const std::string& path);

// Native text format; parse_graph_string(serialize_graph(g)) reproduces g.
std::string serialize_graph(const Graph& g);

} // namespace detour

#endif
