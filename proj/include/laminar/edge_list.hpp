#ifndef laminar_edge_list_hpp
#define laminar_edge_list_hpp

#include <iosfwd>
#include <string>
#include <string_view>

#include "laminar/graph.hpp"

namespace laminar {

// One edge per line as two whitespace-separated labels. A single token
// declares a vertex, '#' starts a comment line, blank lines are skipped.
// Throws InputError on lines with more than two tokens or on self-loops.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes every edge once and declares isolated vertices on their own line.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}

#endif /* laminar_edge_list_hpp */
