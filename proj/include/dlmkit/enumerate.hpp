#ifndef DLMKIT_ENUMERATE_HPP
#define DLMKIT_ENUMERATE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlmkit/graph.hpp"

namespace dlm {

/// Isomorphism-invariant certificate: the lexicographically maximal
/// upper-triangle adjacency bit string over all vertex relabelings, packed
/// with the first bit most significant (column-major order, n <= 10).
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm&) const = default;

    /// The canonical representative as a concrete graph.
    Graph to_graph() const;
};

/// Branch-and-bound over vertex orderings with prefix pruning and twin
/// skipping. Throws InvalidArgument above the n = 10 search-cost cap.
CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 2 <= n <= 9, generated by vertex augmentation from the
/// (n-1)-vertex classes with canonical-form dedup. Deterministic order.
std::vector<Graph> enumerate_connected(int n);

/// Known counts of the above (index = n), for cross-checks.
long long connected_graph_count(int n);

struct IngestOptions {
    bool connected_only = false;
    /// When set, the first malformed line aborts with ParseError; otherwise
    /// errors are collected per line and the stream continues.
    bool strict = true;
};

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<std::string> errors; // "line N: message"
};

/// Parses one graph per line; trusts the producer (no dedup). A leading
/// ">>graph6<<" marker is tolerated.
IngestResult ingest_graph6_stream(std::istream& in, const IngestOptions& options = {});

} // namespace dlm

#endif
