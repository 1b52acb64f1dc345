#include "dlmkit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <unordered_set>

#include "dlmkit/graph6.hpp"

namespace dlm {

namespace {

constexpr int kCanonCap = 10;

struct Canonizer {
    int n;
    const std::uint64_t* rows;
    int total_bits;
    std::uint64_t best = 0;
    bool have_best = false;
    std::array<int, kCanonCap> perm{};
    std::array<std::uint64_t, kCanonCap> twin{};
    std::uint64_t used = 0;

    Canonizer(int order, const std::uint64_t* adj) : n(order), rows(adj) {
        total_bits = n * (n - 1) / 2;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                // The transposition (u v) is an automorphism iff the rows
                // agree outside {u, v}.
                const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((rows[u] & mask) == (rows[v] & mask)) {
                    twin[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                }
            }
        }
    }

    void run() {
        dive(0, 0, 0);
    }

    void dive(int k, std::uint64_t prefix, int bits_so_far) {
        if (k == n) {
            if (!have_best || prefix > best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        // Candidates with their column bits against the placed prefix.
        std::array<std::pair<std::uint64_t, int>, kCanonCap> cand{};
        int cnt = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            // Skip if an interchangeable smaller-id vertex is still unused.
            if (twin[static_cast<std::size_t>(v)] & ~used & ((std::uint64_t{1} << v) - 1)) {
                continue;
            }
            std::uint64_t col = 0;
            for (int i = 0; i < k; ++i) {
                col = (col << 1) | ((rows[v] >> perm[static_cast<std::size_t>(i)]) & 1u);
            }
            // Tie-break on degree so promising branches come first.
            const std::uint64_t rank =
                (col << 7) | static_cast<std::uint64_t>(std::popcount(rows[v]));
            cand[static_cast<std::size_t>(cnt++)] = {rank, v};
        }
        std::sort(cand.begin(), cand.begin() + cnt,
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        const int new_bits = bits_so_far + k;
        for (int c = 0; c < cnt; ++c) {
            const int v = cand[static_cast<std::size_t>(c)].second;
            const std::uint64_t col = cand[static_cast<std::size_t>(c)].first >> 7;
            const std::uint64_t next = (prefix << k) | col;
            if (have_best) {
                const std::uint64_t best_prefix = best >> (total_bits - new_bits);
                if (next < best_prefix) break; // sorted: the rest are no better
            }
            perm[static_cast<std::size_t>(k)] = v;
            used |= std::uint64_t{1} << v;
            dive(k + 1, next, new_bits);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

std::uint64_t canonical_bits_raw(int n, const std::uint64_t* rows) {
    if (n == 1) return 0;
    Canonizer c(n, rows);
    c.run();
    return c.best;
}

} // namespace

Graph CanonicalForm::to_graph() const {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int shift = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            --shift;
            if ((bits >> shift) & 1u) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kCanonCap) {
        throw InvalidArgument("canonical form capped at n = " + std::to_string(kCanonCap));
    }
    std::array<std::uint64_t, kCanonCap> rows{};
    for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.row(v);
    return CanonicalForm{g.order(), canonical_bits_raw(g.order(), rows.data())};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

long long connected_graph_count(int n) {
    static const long long counts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};
    if (n < 1 || n > 9) throw InvalidArgument("connected counts recorded for n <= 9");
    return counts[n];
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 2 || n > 9) {
        throw InvalidArgument("built-in enumeration covers 2 <= n <= 9; ingest a corpus beyond");
    }
    std::vector<std::vector<std::uint64_t>> level = {{0}}; // K_1 as adjacency rows
    for (int k = 2; k <= n; ++k) {
        std::vector<std::vector<std::uint64_t>> next;
        std::unordered_set<std::uint64_t> seen;
        std::array<std::uint64_t, kCanonCap> rows{};
        const int pk = k - 1;
        for (const auto& parent : level) {
            for (std::uint64_t attach = 1; attach < (std::uint64_t{1} << pk); ++attach) {
                for (int i = 0; i < pk; ++i) {
                    rows[static_cast<std::size_t>(i)] =
                        parent[static_cast<std::size_t>(i)] |
                        (((attach >> i) & 1u) << pk);
                }
                rows[static_cast<std::size_t>(pk)] = attach;
                const std::uint64_t canon = canonical_bits_raw(k, rows.data());
                if (seen.insert(canon).second) {
                    next.emplace_back(rows.begin(), rows.begin() + k);
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const auto& rows : level) out.push_back(Graph::from_rows(n, rows));
    return out;
}

IngestResult ingest_graph6_stream(std::istream& in, const IngestOptions& options) {
    IngestResult result;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = line;
        if (sv.starts_with(">>graph6<<")) sv.remove_prefix(10);
        if (sv.empty() || sv == "\r") continue;
        try {
            Graph g = parse_graph6(sv);
            if (options.connected_only && !is_connected(g)) continue;
            result.graphs.push_back(std::move(g));
        } catch (const ParseError& e) {
            const std::string msg = "line " + std::to_string(lineno) + ": " + e.what();
            if (options.strict) throw ParseError(msg);
            result.errors.push_back(msg);
        }
    }
    return result;
}

} // namespace dlm
