#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotscan/common.hpp"

namespace knotscan {

// Finite simple undirected graph with dense vertex indices 0..n-1 and edge
// indices 0..m-1 sorted by (min endpoint, max endpoint). Immutable after
// construction.
class Graph {
public:
    using EdgePair = std::pair<std::uint32_t, std::uint32_t>;

    // text is lines of two whitespace-separated vertex labels; blank lines
    // and '#' comments are ignored. Vertex indices follow first appearance.
    static Graph from_edge_list(const std::string& text);

    // n lines of n characters over {0,1}; must be symmetric with zero diagonal.
    static Graph from_adjacency_matrix(const std::string& text);

    // Built-in families: "k7" (complete), "k3311" (complete multipartite,
    // one digit per part), "petersen", "cube", "tree7" (path), "triangle".
    static Graph generate(const std::string& name);

    static Graph from_edges(std::uint32_t vertex_count, std::vector<EdgePair> edges,
                            std::vector<std::string> labels = {});

    std::uint32_t vertex_count() const { return n_; }
    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }

    const EdgePair& edge(std::uint32_t e) const { return edges_[e]; }
    const std::vector<EdgePair>& edges() const { return edges_; }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
    const std::string& label(std::uint32_t v) const { return labels_[v]; }

    // -1 when the vertices are not adjacent.
    std::int32_t edge_index(std::uint32_t u, std::uint32_t v) const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const { return edge_index(u, v) >= 0; }

    bool edges_adjacent(std::uint32_t e, std::uint32_t f) const;

    // All unordered pairs of edges sharing no vertex, in lexicographic order of
    // (e, f) with e < f. These index the crossing-change variables.
    const std::vector<EdgePair>& nonadjacent_edge_pairs() const { return nonadj_pairs_; }

    // Variable index of the nonadjacent pair {e, f}; -1 if adjacent or equal.
    std::int32_t var_index(std::uint32_t e, std::uint32_t f) const {
        return var_index_[static_cast<std::size_t>(e) * edges_.size() + f];
    }
    std::uint32_t var_count() const { return static_cast<std::uint32_t>(nonadj_pairs_.size()); }

    // FNV-1a over the canonical vertex/edge encoding; identifies the graph in
    // certificates.
    std::uint64_t canonical_hash() const;

private:
    Graph() = default;
    void finalize();

    std::uint32_t n_ = 0;
    std::vector<EdgePair> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_lookup_;
    std::vector<EdgePair> nonadj_pairs_;
    std::vector<std::int32_t> var_index_;
};

// A simple cycle with its canonical traversal: vertex_seq starts at the
// cycle's minimum vertex and proceeds toward its smaller-indexed neighbor on
// the cycle, which fixes the orientation.
struct Cycle {
    std::uint32_t id = 0;
    std::vector<std::uint32_t> vertex_seq;
    std::vector<std::uint32_t> edges;  // sorted edge indices
    Bitset vertex_mask;
    Bitset edge_mask;
    // Per graph edge: +1 if the traversal runs low->high endpoint, -1 if
    // high->low, 0 if the edge is not on the cycle.
    std::vector<std::int8_t> edge_dir;

    std::size_t length() const { return vertex_seq.size(); }
    bool has_edge(std::uint32_t e) const { return edge_mask.test(e); }
};

enum class IntersectionKind : std::uint8_t { empty, connected, disconnected };

struct CycleIntersection {
    IntersectionKind kind;
    std::vector<std::uint32_t> vertices;
    std::vector<std::uint32_t> edges;
};

// Every simple cycle of g exactly once, sorted by (length, vertex_seq) with
// ids assigned in that order. Forests yield an empty list.
std::vector<Cycle> enumerate_cycles(const Graph& g);

// True iff no edge of g joins two vertices of c outside c's own edges.
bool is_chordless(const Graph& g, const Cycle& c);

// Shared subgraph of two distinct cycles and its connectivity class.
CycleIntersection cycle_intersection(const Graph& g, const Cycle& a, const Cycle& b);

}  // namespace knotscan
