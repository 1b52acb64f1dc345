#ifndef DLMKIT_GRAPH_HPP
#define DLMKIT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dlmkit/errors.hpp"

namespace dlm {

/// One machine word per adjacency row.
inline constexpr int kMaxVertices = 64;

/// Immutable simple undirected graph on vertex ids 0..n-1.
/// Adjacency is kept as one 64-bit row per vertex; bit j of row(i) is set
/// iff {i,j} is an edge. Rows are symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    /// Throws InvalidArgument on out-of-range endpoints or a loop (u,u).
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Edgeless graph on n vertices.
    static Graph empty_graph(int n);

    static Graph complete(int n);

    /// Wraps precomputed adjacency rows. Rows must already be symmetric,
    /// loop-free and confined to the low n bits; checked.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
    int degree(int v) const;
    int edge_count() const;

    /// All vertices as a mask (low n bits set).
    std::uint64_t vertex_mask() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Hop-count metric of a connected graph: d[i][j] with d[i][i] = 0.
class DistanceTable {
public:
    DistanceTable(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}
    int order() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    int max_entry() const;
    /// Sum of row i = transmission Tr(v_i).
    long long row_sum(int i) const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

bool is_connected(const Graph& g);
int connected_component_count(const Graph& g);

/// Component membership masks, lowest unvisited vertex first.
std::vector<std::uint64_t> component_masks(const Graph& g);

/// BFS all-pairs distances. Throws DisconnectedGraph if any pair is unreachable.
DistanceTable distance_table(const Graph& g);

/// Tr(v) for every vertex. Throws DisconnectedGraph.
std::vector<long long> transmissions(const Graph& g);

/// Longest shortest path. Throws DisconnectedGraph.
int diameter(const Graph& g);

Graph complement(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced on the given vertex set, relabeled 0..|S|-1 in ascending
/// order of original ids. Throws InvalidArgument on empty/invalid sets.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

} // namespace dlm

#endif
