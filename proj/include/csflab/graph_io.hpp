#pragma once

#include <string>

#include "csflab/graph.hpp"

namespace csflab {

enum class GraphFormat { graph6, edge_list };

// graph6: single-byte vertex count (n <= 16 here), then the upper triangle of
// the adjacency matrix in column order, six bits per byte, each byte offset by
// 63. An optional ">>graph6<<" prefix is accepted and stripped.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Edge-list text: first line the vertex count, then one "u v" pair per line,
// 0-indexed. Distinct errors for malformed numbers, out-of-range endpoints,
// loops, and duplicate edges.
Graph parse_edge_list(const std::string& text);

Graph parse_graph(const std::string& text, GraphFormat format);

}  // namespace csflab
