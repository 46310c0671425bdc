#include "grig/schreier.hpp"

#include <cstdint>
#include <queue>

#include "grig/errors.hpp"
#include "grig/group.hpp"

namespace grig {

SchreierGraph schreier(int n, int depth_cap)
{
    SchreierGraph graph;
    graph.level = n;
    graph.vertices = level(n, depth_cap).words;
    graph.edges.reserve(graph.vertices.size() * 4);
    for (const BinaryWord& w : graph.vertices)
        for (Gen g : kGenerators)
            graph.edges.push_back({w, g, apply_gen(g, w)});
    return graph;
}

bool is_connected(const SchreierGraph& graph)
{
    if (graph.vertices.empty())
        return true;
    // Vertices of one level: heap index minus the level offset.
    const std::uint64_t offset = (std::uint64_t{1} << graph.level) - 1;
    const std::size_t count = graph.vertices.size();
    std::vector<std::vector<std::size_t>> adjacent(count);
    for (const SchreierEdge& e : graph.edges) {
        const std::size_t u = e.from.heap_index() - offset;
        const std::size_t v = e.to.heap_index() - offset;
        adjacent[u].push_back(v);
        adjacent[v].push_back(u);
    }
    std::vector<bool> seen(count, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : adjacent[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push(v);
            }
        }
    }
    return reached == count;
}

} // namespace grig
