#ifndef HCDC_GRAPH6_HPP
#define HCDC_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "graph.hpp"

namespace hcdc {

// One graph6 line -> Graph. The optional ">>graph6<<" header prefix is
// tolerated and skipped. Malformed input throws MalformedGraph6 with the
// offending byte offset.
Graph parse_graph6(const std::string& line);

// Canonical graph6 line (no header, no trailing newline).
std::string encode_graph6(const Graph& g);

// Plain text edge list: "n m" header line, then m lines "u v". '#' starts a
// comment, blank lines are skipped.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

// Reads a whole file of graphs. graph6 files hold one graph per line; an
// edge-list file holds a single graph (detected by its "n m" header).
std::vector<Graph> read_graph_file(const std::string& path);

// All graph6 lines from a stream (header lines and blank lines skipped).
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace hcdc

#endif
