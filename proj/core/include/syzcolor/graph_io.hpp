#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "syzcolor/graph.hpp"

namespace syzcolor {

enum class GraphFormat { automatic, dimacs, edge_list };

// DIMACS ".col": `c` comments, one `p edge <n> <m>` header, `e <u> <v>`
// lines with 1-based vertices. The header edge count is not enforced since
// many published instances list both orientations.
Graph read_dimacs(std::istream &in);

// Edge list: one 0-based `u v` pair per line, `#` starts a comment. The order
// is one more than the largest vertex mentioned unless a `# vertices: N`
// comment raises it.
Graph read_edge_list(std::istream &in);

// `automatic` picks DIMACS when a `p ` header line is present.
Graph read_graph(std::istream &in, GraphFormat format = GraphFormat::automatic);
Graph read_graph_file(const std::filesystem::path &path,
                      GraphFormat format = GraphFormat::automatic);

// Writers emit edges in ascending lexicographic order; output is a pure
// function of the graph.
void write_dimacs(std::ostream &out, const Graph &g);
void write_edge_list(std::ostream &out, const Graph &g);

GraphFormat parse_graph_format(const std::string &name);

} // namespace syzcolor
