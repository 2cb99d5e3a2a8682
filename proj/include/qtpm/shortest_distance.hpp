#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtpm/semiring.hpp"

namespace qtpm {

struct WeightedEdge {
    std::size_t from;
    std::size_t to;
    Value weight;
};

// Finite weighted digraph. Parallel edges are merged with oplus.
struct WeightedGraph {
    std::size_t vertex_count = 0;
    std::vector<WeightedEdge> edges;
};

// Matrix (row-major, n x n) whose entry (u, v) is the oplus over all paths
// u -> v of the otimes of their weights, the empty path included (so the
// diagonal is at least one()). Generalized Floyd-Warshall; cycles through the
// pivot are resolved with Semiring::star.
std::vector<Value> path_closure(const WeightedGraph& g, Semiring sr);

// Dist(from, to): oplus over all u in from, v in to of path_closure(u, v).
Value shortest_distance(const WeightedGraph& g, std::span<const std::size_t> from, std::span<const std::size_t> to,
                        Semiring sr);

// result[v] = oplus over u of init[u] otimes Dist({u}, {v}).
// Condenses strongly connected components and runs the closure only inside
// each component, so acyclic parts cost linear time.
std::vector<Value> propagate(const WeightedGraph& g, std::span<const Value> init, Semiring sr);

}  // namespace qtpm
