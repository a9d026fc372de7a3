#ifndef PGAUT_GRAPH_IO_HPP
#define PGAUT_GRAPH_IO_HPP

#include <string>

#include "pgaut/graph.hpp"
#include "pgaut/power_graph.hpp"

namespace pgaut {

enum class GraphFormat { edgelist, dot, dimacs, json };

// Throws std::invalid_argument on an unknown name.
GraphFormat parse_graph_format(const std::string& name);
std::string format_name(GraphFormat f);

// Deterministic serialization. edgelist: "u v" per line, u < v, ascending.
// dimacs: "p edge N M" then 1-based "e u v" lines. json:
// {"n": int, "orders": [int], "edges": [[int,int]]}. dot is export-only.
std::string export_graph(const PowerGraph& g, GraphFormat format);

// Accepts edgelist, dimacs and json (dot is not a parse format). The
// edgelist vertex count is inferred as max vertex + 1.
Graph import_graph(const std::string& text, GraphFormat format);

}  // namespace pgaut

#endif
