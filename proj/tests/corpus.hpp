#pragma once

#include <random>
#include <string>
#include <vector>

#include "knotscan/graph.hpp"

namespace testutil {

using knotscan::Graph;

inline Graph complete(std::uint32_t n) {
    std::vector<Graph::EdgePair> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

// Two vertex-disjoint triangles, no connection.
inline Graph two_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Two disjoint triangles joined by a single bridge edge.
inline Graph two_triangles_bridge() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Four triangles in a ring: two opposite ones share a vertex with their
// neighbors, the other two connect through bridge edges. Exactly one quad.
inline Graph quad_ring() {
    return Graph::from_edges(11, {{0, 1}, {0, 2}, {1, 2},    // C1 = (0,1,2)
                                  {2, 3}, {2, 4}, {3, 4},    // C2 = (2,3,4), shares 2
                                  {5, 6}, {5, 7}, {6, 7},    // C3 = (5,6,7)
                                  {0, 8}, {0, 9}, {8, 9},    // C4 = (0,8,9), shares 0
                                  {4, 5},                    // bridge C2 -> C3
                                  {7, 8}});                  // bridge C3 -> C4
}

// Four disjoint triangles in a ring where the only route between the first
// two passes through a vertex of the third.
inline Graph blocked_ring() {
    return Graph::from_edges(12, {{0, 1},  {1, 2},   {0, 2},     // C1
                                  {3, 4},  {4, 5},   {3, 5},     // C2
                                  {6, 7},  {7, 8},   {6, 8},     // C3
                                  {9, 10}, {10, 11}, {9, 11},    // C4
                                  {0, 6},  {3, 6},               // C1-C2 only via 6 in C3
                                  {5, 7},                        // C2 -> C3
                                  {8, 9},                        // C3 -> C4
                                  {1, 11}});                     // C4 -> C1
}

inline Graph erdos_renyi(std::uint32_t n, double p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Graph::EdgePair> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace testutil
