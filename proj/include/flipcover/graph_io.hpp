#pragma once

#include <iosfwd>
#include <string>

#include "flipcover/graph.hpp"

namespace flipcover {

// Plain edge-list format: first line "n m", then m lines "u v".
// Writer emits edges lex-sorted with u < v, so write(read(x)) == x for
// canonical inputs and read(write(g)) == g always.
graph read_edge_list(std::istream& in);
void write_edge_list(const graph& g, std::ostream& out);

// JSON format: {"schema_version":1,"n":...,"edges":[[u,v],...]} with optional
// "layer" and "native" arrays carrying per-vertex tags.
graph read_graph_json(std::istream& in);
void write_graph_json(const graph& g, std::ostream& out);

graph load_graph(const std::string& path, const std::string& format); // "edgelist" | "json"
void save_graph(const graph& g, const std::string& path, const std::string& format);

} // namespace flipcover
