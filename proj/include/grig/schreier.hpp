#pragma once

#include <vector>

#include "grig/binary_word.hpp"
#include "grig/gen_word.hpp"
#include "grig/limits.hpp"

namespace grig {

struct SchreierEdge {
    BinaryWord from;
    Gen gen;
    BinaryWord to;
};

/// Action of a, b, c, d on one level of the tree. Vertices are in
/// lexicographic order; edges are grouped by source vertex, generators in
/// the order a, b, c, d.
struct SchreierGraph {
    int level = 0;
    std::vector<BinaryWord> vertices;
    std::vector<SchreierEdge> edges;
};

SchreierGraph schreier(int n, int depth_cap = kTreeDepthCap);

bool is_connected(const SchreierGraph& graph);

} // namespace grig
