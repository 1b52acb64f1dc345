#include "dlmkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dlm {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw InvalidArgument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                              ", got " + std::to_string(n));
    }
}

} // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    check_order(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw InvalidArgument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
        }
        if (u == v) {
            throw InvalidArgument("loop edge (" + std::to_string(u) + "," + std::to_string(u) +
                                  ") not allowed");
        }
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return Graph(n, std::move(adj));
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::empty_graph(int n) {
    check_order(n);
    return Graph(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

Graph Graph::complete(int n) {
    check_order(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v);
    return Graph(n, std::move(adj));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n) throw InvalidArgument("row count != n");
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> adj(rows.begin(), rows.end());
    for (int i = 0; i < n; ++i) {
        if (adj[static_cast<std::size_t>(i)] & ~all) throw InvalidArgument("adjacency bit beyond n");
        if ((adj[static_cast<std::size_t>(i)] >> i) & 1u) throw InvalidArgument("loop bit set");
        for (int j = i + 1; j < n; ++j) {
            const bool ij = (adj[static_cast<std::size_t>(i)] >> j) & 1u;
            const bool ji = (adj[static_cast<std::size_t>(j)] >> i) & 1u;
            if (ij != ji) throw InvalidArgument("adjacency not symmetric");
        }
    }
    return Graph(n, std::move(adj));
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::uint64_t Graph::vertex_mask() const {
    return (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
}

int DistanceTable::max_entry() const {
    int m = 0;
    for (int v : d_) m = std::max(m, v);
    return m;
}

long long DistanceTable::row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
}

namespace {

// Vertices reachable from `start` by repeated frontier expansion.
std::uint64_t reachable_mask(const Graph& g, int start) {
    std::uint64_t visited = std::uint64_t{1} << start;
    std::uint64_t frontier = visited;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        next &= ~visited;
        visited |= next;
        frontier = next;
    }
    return visited;
}

} // namespace

bool is_connected(const Graph& g) { return reachable_mask(g, 0) == g.vertex_mask(); }

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t remaining = g.vertex_mask();
    while (remaining) {
        const int v = std::countr_zero(remaining);
        const std::uint64_t comp = reachable_mask(g, v);
        comps.push_back(comp);
        remaining &= ~comp;
    }
    return comps;
}

int connected_component_count(const Graph& g) {
    return static_cast<int>(component_masks(g).size());
}

DistanceTable distance_table(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        std::uint64_t visited = std::uint64_t{1} << s;
        std::uint64_t frontier = visited;
        int dist = 0;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.row(v);
            }
            next &= ~visited;
            ++dist;
            std::uint64_t t = next;
            while (t) {
                const int v = std::countr_zero(t);
                t &= t - 1;
                d[static_cast<std::size_t>(s) * n + v] = dist;
            }
            visited |= next;
            frontier = next;
        }
        if (visited != g.vertex_mask()) {
            throw DisconnectedGraph("distance table requires a connected graph");
        }
    }
    return DistanceTable(n, std::move(d));
}

std::vector<long long> transmissions(const Graph& g) {
    const DistanceTable t = distance_table(g);
    std::vector<long long> tr(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) tr[static_cast<std::size_t>(i)] = t.row_sum(i);
    return tr;
}

int diameter(const Graph& g) { return distance_table(g).max_entry(); }

Graph complement(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = g.vertex_mask();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)] = all & ~g.row(v) & ~(std::uint64_t{1} << v);
    }
    return Graph::from_rows(n, adj);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    if (n > kMaxVertices) throw InvalidArgument("union exceeds the vertex cap");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < a.order(); ++v) adj[static_cast<std::size_t>(v)] = a.row(v);
    for (int v = 0; v < b.order(); ++v) {
        adj[static_cast<std::size_t>(a.order() + v)] = b.row(v) << a.order();
    }
    return Graph::from_rows(n, adj);
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.order();
    const int n = na + b.order();
    if (n > kMaxVertices) throw InvalidArgument("join exceeds the vertex cap");
    Graph u = disjoint_union(a, b);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t a_mask = (std::uint64_t{1} << na) - 1;
    const std::uint64_t b_mask = u.vertex_mask() & ~a_mask;
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)] = u.row(v) | (v < na ? b_mask : a_mask);
    }
    return Graph::from_rows(n, adj);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.empty()) throw InvalidArgument("induced subgraph on empty vertex set");
    for (int v : vs) {
        if (v < 0 || v >= g.order()) {
            throw InvalidArgument("induced subgraph vertex out of range: " + std::to_string(v));
        }
    }
    const int m = static_cast<int>(vs.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(m, adj);
}

} // namespace dlm
