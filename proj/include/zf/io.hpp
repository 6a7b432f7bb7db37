#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "zf/graph.hpp"

namespace zf {

/// Edge-list text: a header line "n m", then m lines "u v" with 0-indexed
/// endpoints. Anything after '#' on a line is ignored.
Graph read_edge_list(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::Reject);

/// DIMACS-style text: "c" comment lines, one "p edge n m" line, and "e u v"
/// lines with 1-indexed endpoints.
Graph read_dimacs(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::Reject);

/// Picks the reader from the first meaningful line ("p"/"c" means DIMACS).
Graph read_graph(std::istream& in, DuplicatePolicy policy = DuplicatePolicy::Reject);
Graph read_graph_file(const std::string& path,
                      DuplicatePolicy policy = DuplicatePolicy::Reject);

void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

/// Graphviz output. `fill` maps vertices to a fill color; unlisted vertices
/// are drawn unfilled.
void write_dot(std::ostream& out, const Graph& g,
               const std::map<Vertex, std::string>& fill = {});

}  // namespace zf
