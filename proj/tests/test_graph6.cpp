#include "doctest.h"

#include <random>

#include "dlmkit/graph6.hpp"

using dlm::Graph;

TEST_CASE("hand-encoded graph6 values") {
    // n=3 is 'B' (63+3); the K_3 body bits 111 pad to 111000 = 56, 56+63 = 'w'.
    const Graph k3 = dlm::parse_graph6("Bw");
    CHECK(k3 == Graph::complete(3));
    CHECK(dlm::to_graph6(Graph::complete(3)) == "Bw");

    // K_1: header '@' (63+1), empty body.
    CHECK(dlm::parse_graph6("@") == Graph::empty_graph(1));
    CHECK(dlm::to_graph6(Graph::empty_graph(1)) == "@");

    // K_2: one bit 1 padded to 100000 = 32 -> '_'.
    CHECK(dlm::to_graph6(Graph::complete(2)) == "A_");
    CHECK(dlm::parse_graph6("A_") == Graph::complete(2));

    // Trailing newline is tolerated.
    CHECK(dlm::parse_graph6("Bw\n") == Graph::complete(3));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(dlm::parse_graph6(""), dlm::ParseError);
    CHECK_THROWS_AS(dlm::parse_graph6("\x1f"), dlm::ParseError);  // header below '?'
    CHECK_THROWS_AS(dlm::parse_graph6("C"), dlm::ParseError);     // truncated body
    CHECK_THROWS_AS(dlm::parse_graph6("Bw?"), dlm::ParseError);   // trailing bytes
    CHECK_THROWS_AS(dlm::parse_graph6("A`"), dlm::ParseError);    // nonzero padding
    CHECK_THROWS_AS(dlm::parse_graph6("?"), dlm::ParseError);     // n = 0
    CHECK_THROWS_AS(dlm::parse_graph6("~~????"), dlm::ParseError); // 8-byte order form
    // n = 65 exceeds the cap regardless of body.
    CHECK_THROWS_AS(dlm::parse_graph6("~?@@"), dlm::ParseError);
}

TEST_CASE("round trip on random graphs up to the 64-vertex cap") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() & 1) edges.emplace_back(u, v);
            }
        }
        const Graph g = Graph::from_edges(n, edges);
        const std::string text = dlm::to_graph6(g);
        CHECK(dlm::parse_graph6(text) == g);
        CHECK(dlm::to_graph6(dlm::parse_graph6(text)) == text);
    }
}

TEST_CASE("64-vertex graphs use the long order form") {
    const Graph g = Graph::complete(64);
    const std::string text = dlm::to_graph6(g);
    REQUIRE(text.size() >= 4);
    CHECK(text[0] == '~');
    CHECK(dlm::parse_graph6(text) == g);

    const std::string t63 = dlm::to_graph6(Graph::empty_graph(63));
    CHECK(t63[0] == '~');
    CHECK(dlm::parse_graph6(t63) == Graph::empty_graph(63));

    // n = 62 still uses the single-byte header.
    CHECK(dlm::to_graph6(Graph::empty_graph(62))[0] == 63 + 62);
}
