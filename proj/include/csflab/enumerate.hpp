#pragma once

#include <vector>

#include "csflab/graph.hpp"

namespace csflab {

enum class GraphClass { All, Forests, Trees };

// One canonical representative per isomorphism class, sorted by CanonicalKey.
// Guards: n <= 9 for All, n <= 12 for Forests/Trees (CSF_LAB_MAX_N overrides).
std::vector<Graph> enumerate_graphs(int n, GraphClass cls);

}  // namespace csflab
