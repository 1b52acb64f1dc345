#include "dlmkit/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace dlm {

namespace {

Graph make_pattern(Pattern p) {
    using E = std::pair<int, int>;
    const std::vector<E> p4 = {{0, 1}, {1, 2}, {2, 3}};
    switch (p) {
        case Pattern::P4:
            return Graph::from_edges(4, p4);
        case Pattern::P5:
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        case Pattern::I1: {
            auto e = p4; e.emplace_back(1, 4);
            return Graph::from_edges(5, e);
        }
        case Pattern::I2: {
            auto e = p4; e.emplace_back(0, 4); e.emplace_back(1, 4);
            return Graph::from_edges(5, e);
        }
        case Pattern::I3: {
            auto e = p4; e.emplace_back(0, 4); e.emplace_back(2, 4);
            return Graph::from_edges(5, e);
        }
        case Pattern::I4: {
            auto e = p4; e.emplace_back(1, 4); e.emplace_back(2, 4);
            return Graph::from_edges(5, e);
        }
        case Pattern::I5: {
            auto e = p4; e.emplace_back(0, 4); e.emplace_back(1, 4); e.emplace_back(2, 4);
            return Graph::from_edges(5, e);
        }
        case Pattern::J1:
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        case Pattern::J2:
            // C_5 on v1 v2 v3 v4 u plus the chord u~v2.
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 1}});
        case Pattern::J3: {
            auto e = p4;
            for (int v = 0; v < 4; ++v) e.emplace_back(v, 4);
            return Graph::from_edges(5, e);
        }
    }
    throw InvalidArgument("unknown pattern");
}

} // namespace

const Graph& pattern_graph(Pattern p) {
    static const std::array<Graph, 10> cache = [] {
        std::array<Graph, 10> c;
        for (Pattern p : all_patterns()) c[static_cast<std::size_t>(p)] = make_pattern(p);
        return c;
    }();
    return cache[static_cast<std::size_t>(p)];
}

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::P4: return "P4";
        case Pattern::P5: return "P5";
        case Pattern::I1: return "I1";
        case Pattern::I2: return "I2";
        case Pattern::I3: return "I3";
        case Pattern::I4: return "I4";
        case Pattern::I5: return "I5";
        case Pattern::J1: return "J1";
        case Pattern::J2: return "J2";
        case Pattern::J3: return "J3";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(const std::string& name) {
    for (Pattern p : all_patterns()) {
        if (pattern_name(p) == name) return p;
    }
    return std::nullopt;
}

const std::vector<Pattern>& all_patterns() {
    static const std::vector<Pattern> all = {Pattern::P4, Pattern::P5, Pattern::I1, Pattern::I2,
                                             Pattern::I3, Pattern::I4, Pattern::I5, Pattern::J1,
                                             Pattern::J2, Pattern::J3};
    return all;
}

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& p;
    std::array<int, 8> map{};
    std::uint64_t used = 0;

    bool extend(int k) {
        if (k == p.order()) return true;
        for (int v = 0; v < g.order(); ++v) {
            if ((used >> v) & 1u) continue;
            if (g.degree(v) < p.degree(k)) continue;
            bool ok = true;
            for (int j = 0; j < k; ++j) {
                if (p.adjacent(k, j) != g.adjacent(v, map[static_cast<std::size_t>(j)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(k)] = v;
            used |= std::uint64_t{1} << v;
            if (extend(k + 1)) return true;
            used &= ~(std::uint64_t{1} << v);
        }
        return false;
    }
};

} // namespace

bool contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return false;
    InducedSearch s{g, pattern};
    return s.extend(0);
}

bool contains_induced(const Graph& g, Pattern p) {
    return contains_induced(g, pattern_graph(p));
}

bool is_p5_free(const Graph& g) { return !contains_induced(g, Pattern::P5); }
bool is_p4_free(const Graph& g) { return !contains_induced(g, Pattern::P4); }

bool is_cograph(const Graph& g) {
    if (g.order() == 1) return true;
    const auto split = [&](const Graph& h) {
        std::vector<Graph> parts;
        for (std::uint64_t mask : component_masks(h)) {
            std::vector<int> vs;
            std::uint64_t m = mask;
            while (m) {
                vs.push_back(std::countr_zero(m));
                m &= m - 1;
            }
            parts.push_back(induced_subgraph(h, vs));
        }
        return parts;
    };
    if (!is_connected(g)) {
        for (const Graph& c : split(g)) {
            if (!is_cograph(c)) return false;
        }
        return true;
    }
    const Graph gc = complement(g);
    if (is_connected(gc)) return false;
    for (const Graph& c : split(gc)) {
        if (!is_cograph(c)) return false;
    }
    return true;
}

std::optional<JGraphShape> j_graph_recognize(const Graph& g) {
    const int n = g.order();
    if (n < 4 || !is_connected(g)) return std::nullopt;
    for (int ra = 0; ra < n; ++ra) {
        for (int rb = 0; rb < n; ++rb) {
            if (ra == rb || g.adjacent(ra, rb)) continue;
            const std::uint64_t ua = g.row(ra);
            const std::uint64_t ub = g.row(rb);
            if (ua & ub) continue; // common neighbour: distance 2, not 3
            if ((ua | ub | (std::uint64_t{1} << ra) | (std::uint64_t{1} << rb)) !=
                g.vertex_mask()) {
                continue;
            }
            const int a = std::popcount(ua);
            const int b = std::popcount(ub);
            if (a < 1 || b < 1) continue;
            // a-side vertices: adjacent to the root and all of the b-side,
            // nothing else; symmetrically for the b-side.
            bool ok = true;
            for (std::uint64_t m = ua; ok && m; m &= m - 1) {
                const int x = std::countr_zero(m);
                ok = g.row(x) == ((ub | (std::uint64_t{1} << ra)));
            }
            for (std::uint64_t m = ub; ok && m; m &= m - 1) {
                const int y = std::countr_zero(m);
                ok = g.row(y) == ((ua | (std::uint64_t{1} << rb)));
            }
            if (!ok) continue;
            JGraphShape shape;
            if (a >= b) {
                shape = {a, b, ra, rb};
            } else {
                shape = {b, a, rb, ra};
            }
            return shape;
        }
    }
    return std::nullopt;
}

} // namespace dlm
