#include "dlmkit/families.hpp"

#include <numeric>
#include <utility>

namespace dlm {

namespace {

Graph complete_multipartite_graph(const std::vector<int>& parts) {
    if (parts.empty()) throw InvalidArgument("complete multipartite graph needs at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw InvalidArgument("complete multipartite part sizes must be positive");
        n += p;
    }
    if (n > kMaxVertices) throw InvalidArgument("multipartite order exceeds the vertex cap");
    std::vector<std::pair<int, int>> edges;
    int astart = 0;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        int bstart = astart + parts[pi];
        for (std::size_t pj = pi + 1; pj < parts.size(); ++pj) {
            for (int u = astart; u < astart + parts[pi]; ++u) {
                for (int v = bstart; v < bstart + parts[pj]; ++v) edges.emplace_back(u, v);
            }
            bstart += parts[pj];
        }
        astart += parts[pi];
    }
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycles need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph star_plus_edge_graph(int n) {
    if (n < 3) throw InvalidArgument("K_{1,n-1}+e needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    edges.emplace_back(1, 2); // lexicographically first non-adjacent pair
    return Graph::from_edges(n, edges);
}

Graph balanced_bipartite_plus_edge_graph(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidArgument("K_{n/2,n/2}+e needs even n >= 4");
    Graph base = complete_multipartite_graph({n / 2, n / 2});
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (base.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    edges.emplace_back(0, 1); // first non-adjacent pair: inside the first side
    return Graph::from_edges(n, edges);
}

Graph k2_join_empty_graph(int n) {
    if (n < 3) throw InvalidArgument("K_2 nabla (n-2)K_1 needs n >= 3");
    return join(Graph::complete(2), Graph::empty_graph(n - 2));
}

Graph k1_join_balanced_bipartite_graph(int n) {
    if (n < 3 || n % 2 != 1) {
        throw InvalidArgument("K_1 nabla K_{(n-1)/2,(n-1)/2} needs odd n >= 3");
    }
    return join(Graph::complete(1), complete_multipartite_graph({(n - 1) / 2, (n - 1) / 2}));
}

Graph j_graph_graph(int a, int b) {
    if (a < 1 || b < 1) throw InvalidArgument("J(a,b) needs a,b >= 1");
    const int n = a + b + 2;
    if (n > kMaxVertices) throw InvalidArgument("J(a,b) order exceeds the vertex cap");
    std::vector<std::pair<int, int>> edges;
    const int root_a = 0;
    const int root_b = a + 1;
    for (int i = 1; i <= a; ++i) edges.emplace_back(root_a, i);
    for (int j = a + 2; j < n; ++j) edges.emplace_back(root_b, j);
    for (int i = 1; i <= a; ++i) {
        for (int j = a + 2; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edges(n, edges);
}

ExactSpectrum spectrum_of_integers(const std::vector<std::pair<mpz_class, int>>& pairs) {
    IntPoly p = IntPoly::constant(1);
    for (const auto& [value, mult] : pairs) {
        const IntPoly lin{std::vector<mpz_class>{-value, mpz_class(1)}};
        for (int i = 0; i < mult; ++i) p = p * lin;
    }
    return ExactSpectrum::from_char_poly(std::move(p));
}

} // namespace

int FamilySpec::order() const {
    switch (family) {
        case Family::complete_multipartite:
            return std::accumulate(parts.begin(), parts.end(), 0);
        case Family::j_graph:
            return a + b + 2;
        default:
            return n;
    }
}

Graph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::complete:
            return Graph::complete(spec.n);
        case Family::path:
            return path_graph(spec.n);
        case Family::cycle:
            return cycle_graph(spec.n);
        case Family::star:
            if (spec.n < 2) throw InvalidArgument("stars need n >= 2");
            return complete_multipartite_graph({1, spec.n - 1});
        case Family::complete_multipartite:
            return complete_multipartite_graph(spec.parts);
        case Family::star_plus_edge:
            return star_plus_edge_graph(spec.n);
        case Family::balanced_bipartite_plus_edge:
            return balanced_bipartite_plus_edge_graph(spec.n);
        case Family::k2_join_empty:
            return k2_join_empty_graph(spec.n);
        case Family::k1_join_balanced_bipartite:
            return k1_join_balanced_bipartite_graph(spec.n);
        case Family::balanced_tripartite:
            if (spec.n < 3 || spec.n % 3 != 0) {
                throw InvalidArgument("K_{n/3,n/3,n/3} needs n divisible by 3");
            }
            return complete_multipartite_graph({spec.n / 3, spec.n / 3, spec.n / 3});
        case Family::j_graph:
            return j_graph_graph(spec.a, spec.b);
    }
    throw InvalidArgument("unknown family");
}

std::vector<std::pair<FamilySpec, Graph>> classified_family_members(int n) {
    if (n < 6) throw InvalidArgument("the classified families are stated for n >= 6");
    std::vector<std::pair<FamilySpec, Graph>> out;
    auto push = [&](FamilySpec spec) { out.emplace_back(spec, build(spec)); };
    push({.family = Family::complete_multipartite, .n = n, .parts = {2, n - 2}});
    push({.family = Family::star_plus_edge, .n = n});
    if (n % 2 == 0) push({.family = Family::balanced_bipartite_plus_edge, .n = n});
    push({.family = Family::k2_join_empty, .n = n});
    if (n % 2 == 1) push({.family = Family::k1_join_balanced_bipartite, .n = n});
    if (n % 3 == 0) push({.family = Family::balanced_tripartite, .n = n});
    return out;
}

std::vector<std::pair<std::string, Graph>> small_n_members(int n) {
    std::vector<std::pair<std::string, Graph>> out;
    if (n == 4) {
        out.emplace_back("P_4", build({.family = Family::path, .n = 4}));
        out.emplace_back("K_{1,3}+e", build({.family = Family::star_plus_edge, .n = 4}));
        out.emplace_back("K_2 v 2K_1", build({.family = Family::k2_join_empty, .n = 4}));
    } else if (n == 5) {
        out.emplace_back("K_{2,3}",
                         build({.family = Family::complete_multipartite, .parts = {2, 3}}));
        out.emplace_back("K_{1,4}+e", build({.family = Family::star_plus_edge, .n = 5}));
        out.emplace_back("K_2 v 3K_1", build({.family = Family::k2_join_empty, .n = 5}));
        out.emplace_back("K_1 v K_{2,2}",
                         build({.family = Family::k1_join_balanced_bipartite, .n = 5}));
        out.emplace_back("C_5", build({.family = Family::cycle, .n = 5}));
    } else {
        throw InvalidArgument("small-n member lists exist only for n = 4 and n = 5");
    }
    return out;
}

ExactSpectrum closed_form_dl_spectrum(const FamilySpec& spec) {
    const int n = spec.order();
    const auto is_two_part = [&](int first) {
        return spec.family == Family::complete_multipartite && spec.parts.size() == 2 &&
               spec.parts[0] == first && spec.parts[1] == n - first;
    };
    if (is_two_part(2)) {
        // {(2n-2)^(n-3), n+2, n, 0}
        return spectrum_of_integers(
            {{2 * n - 2, n - 3}, {n + 2, 1}, {n, 1}, {0, 1}});
    }
    if (spec.family == Family::balanced_bipartite_plus_edge) {
        build(spec); // parameter validation
        // {(3n/2)^(n-3), 3n/2-2, n, 0}
        return spectrum_of_integers(
            {{3 * n / 2, n - 3}, {3 * n / 2 - 2, 1}, {n, 1}, {0, 1}});
    }
    if (spec.family == Family::star_plus_edge) {
        build(spec);
        // {(2n-1)^(n-3), 2n-3, n, 0}
        return spectrum_of_integers(
            {{2 * n - 1, n - 3}, {2 * n - 3, 1}, {n, 1}, {0, 1}});
    }
    if (spec.family == Family::k2_join_empty) {
        build(spec);
        // {(2n-2)^(n-3), n^2, 0}
        return spectrum_of_integers({{2 * n - 2, n - 3}, {n, 2}, {0, 1}});
    }
    if (spec.family == Family::k1_join_balanced_bipartite) {
        build(spec);
        // {((3n-1)/2)^(n-3), n^2, 0}
        return spectrum_of_integers({{(3 * n - 1) / 2, n - 3}, {n, 2}, {0, 1}});
    }
    if (spec.family == Family::balanced_tripartite) {
        build(spec);
        // {(4n/3)^(n-3), n^2, 0}
        return spectrum_of_integers({{4 * n / 3, n - 3}, {n, 2}, {0, 1}});
    }
    throw InvalidArgument("no closed-form spectrum outside the six classified families");
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete-multipartite") return Family::complete_multipartite;
    if (name == "star-plus-edge") return Family::star_plus_edge;
    if (name == "balanced-bipartite-plus-edge") return Family::balanced_bipartite_plus_edge;
    if (name == "k2-join-empty") return Family::k2_join_empty;
    if (name == "k1-join-balanced-bipartite") return Family::k1_join_balanced_bipartite;
    if (name == "balanced-tripartite") return Family::balanced_tripartite;
    if (name == "j-graph") return Family::j_graph;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete_multipartite: return "complete-multipartite";
        case Family::star_plus_edge: return "star-plus-edge";
        case Family::balanced_bipartite_plus_edge: return "balanced-bipartite-plus-edge";
        case Family::k2_join_empty: return "k2-join-empty";
        case Family::k1_join_balanced_bipartite: return "k1-join-balanced-bipartite";
        case Family::balanced_tripartite: return "balanced-tripartite";
        case Family::j_graph: return "j-graph";
    }
    return "unknown";
}

} // namespace dlm
