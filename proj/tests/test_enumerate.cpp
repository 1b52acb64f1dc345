#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dlmkit/enumerate.hpp"
#include "dlmkit/families.hpp"
#include "dlmkit/graph6.hpp"

using dlm::CanonicalForm;
using dlm::Family;
using dlm::Graph;

namespace {

// Independent certificate for the oracle: lexicographically *smallest*
// row-major upper-triangle string over all n! permutations, no pruning.
std::uint64_t min_lex_code(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                code = (code << 1) |
                       (g.adjacent(perm[static_cast<std::size_t>(i)],
                                   perm[static_cast<std::size_t>(j)])
                            ? 1u
                            : 0u);
            }
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph labeled_graph(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("canonical forms are isomorphism invariants") {
    const Graph p4 = dlm::build({.family = Family::path, .n = 4});
    const Graph p4_relabel = Graph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(dlm::canonical_form(p4) == dlm::canonical_form(p4_relabel));
    CHECK(dlm::isomorphic(p4, p4_relabel));

    const Graph star = dlm::build({.family = Family::star, .n = 4});
    CHECK(dlm::canonical_form(star) != dlm::canonical_form(p4));
    CHECK_FALSE(dlm::isomorphic(star, p4));

    // C_5 is self-complementary.
    const Graph c5 = dlm::build({.family = Family::cycle, .n = 5});
    CHECK(dlm::canonical_form(c5) == dlm::canonical_form(dlm::complement(c5)));

    // The canonical representative is itself a member of the class.
    const CanonicalForm cf = dlm::canonical_form(c5);
    CHECK(dlm::isomorphic(cf.to_graph(), c5));
    CHECK(dlm::canonical_form(cf.to_graph()) == cf);

    CHECK_THROWS_AS(dlm::canonical_form(Graph::complete(11)), dlm::InvalidArgument);
}

TEST_CASE("canonical forms under random relabelings") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() & 1) edges.emplace_back(u, v);
            }
        }
        const Graph g = Graph::from_edges(n, edges);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabeled;
        for (const auto& [u, v] : edges) {
            relabeled.emplace_back(perm[static_cast<std::size_t>(u)],
                                   perm[static_cast<std::size_t>(v)]);
        }
        REQUIRE(dlm::canonical_form(g) ==
                dlm::canonical_form(Graph::from_edges(n, relabeled)));
    }
}

TEST_CASE("connected enumeration counts") {
    CHECK(dlm::enumerate_connected(2).size() == 1);
    CHECK(dlm::enumerate_connected(3).size() == 2);
    CHECK(dlm::enumerate_connected(4).size() == 6);
    CHECK(dlm::enumerate_connected(5).size() == 21);
    CHECK(dlm::enumerate_connected(6).size() == 112);
    CHECK(dlm::enumerate_connected(7).size() == 853);
    CHECK_THROWS_AS(dlm::enumerate_connected(1), dlm::InvalidArgument);
    CHECK_THROWS_AS(dlm::enumerate_connected(10), dlm::InvalidArgument);
}

TEST_CASE("every emitted graph is connected with the right order, no duplicates") {
    for (int n = 2; n <= 7; ++n) {
        std::set<CanonicalForm> seen;
        for (const Graph& g : dlm::enumerate_connected(n)) {
            REQUIRE(g.order() == n);
            REQUIRE(dlm::is_connected(g));
            REQUIRE(seen.insert(dlm::canonical_form(g)).second);
        }
    }
}

TEST_CASE("brute force over all labeled graphs confirms the enumeration at n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        std::set<std::uint64_t> classes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            const Graph g = labeled_graph(n, mask);
            if (!dlm::is_connected(g)) continue;
            classes.insert(min_lex_code(g));
        }
        const std::vector<Graph> emitted = dlm::enumerate_connected(n);
        REQUIRE(classes.size() == emitted.size());
        std::set<std::uint64_t> emitted_codes;
        for (const Graph& g : emitted) emitted_codes.insert(min_lex_code(g));
        REQUIRE(emitted_codes == classes);
    }
}

TEST_CASE("graph6 ingestion") {
    SUBCASE("round trip through a stream") {
        std::ostringstream out;
        for (const Graph& g : dlm::enumerate_connected(6)) out << dlm::to_graph6(g) << '\n';
        std::istringstream in(out.str());
        const auto res = dlm::ingest_graph6_stream(in);
        CHECK(res.graphs.size() == 112);
        CHECK(res.errors.empty());
    }
    SUBCASE("empty stream") {
        std::istringstream in("");
        CHECK(dlm::ingest_graph6_stream(in).graphs.empty());
    }
    SUBCASE("errors name the line") {
        std::istringstream in("Bw\nBw\n!!bad\nBw\n");
        dlm::IngestOptions opt;
        opt.strict = false;
        const auto res = dlm::ingest_graph6_stream(in, opt);
        CHECK(res.graphs.size() == 3);
        REQUIRE(res.errors.size() == 1);
        CHECK(res.errors[0].find("line 3") != std::string::npos);
    }
    SUBCASE("strict mode throws on the bad line") {
        std::istringstream in("Bw\n!!bad\n");
        CHECK_THROWS_AS(dlm::ingest_graph6_stream(in), dlm::ParseError);
    }
    SUBCASE("connected-only filter") {
        // K_3 u K_1 on 4 vertices: "Cw"-style disconnected code.
        const Graph k3k1 = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
        std::istringstream in(dlm::to_graph6(k3k1) + "\nBw\n");
        dlm::IngestOptions opt;
        opt.connected_only = true;
        const auto res = dlm::ingest_graph6_stream(in, opt);
        REQUIRE(res.graphs.size() == 1);
        CHECK(res.graphs[0].order() == 3);
    }
    SUBCASE("nauty header marker is tolerated") {
        std::istringstream in(">>graph6<<Bw\n");
        CHECK(dlm::ingest_graph6_stream(in).graphs.size() == 1);
    }
}
