#ifndef DLMKIT_VERIFY_HPP
#define DLMKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlmkit/graph.hpp"
#include "dlmkit/spectrum.hpp"

namespace dlm {

struct SweepOptions {
    int workers = 1;
    std::optional<std::string> corpus_path; // graph6 lines; default: built-in enumeration
    bool corpus_connected_only = false;     // silently drop disconnected corpus lines
    std::optional<std::string> cache_dir;   // spectra cache keyed by (n, corpus hash)
    bool with_descriptors = false;          // compute per-graph largest-root descriptors
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> counterexamples; // graph6 (possibly annotated)

    void fail(std::string witness);
};

struct GraphRecord {
    std::string g6;
    std::string largest_descriptor; // exact integer or "~approx" (when requested)
    int multiplicity = 0;           // m(dl_1)
    int diameter = 0;
    bool p5_free = false;
    int complement_components = 0;
};

struct ClassificationReport {
    int n = 0;
    long long count = 0;
    std::vector<GraphRecord> records;
    std::vector<std::string> class_members; // g6, sorted
    std::vector<std::string> expected;      // g6 of the predicted members, sorted
    std::vector<std::string> missing;
    std::vector<std::string> unexpected;
    bool match = false;
    std::vector<SuiteResult> suites;

    bool passed() const;
};

struct CospectralGroup {
    std::string key;
    std::vector<std::string> members; // g6
};

struct CospectralReport {
    int n = 0;
    long long count = 0;
    std::vector<CospectralGroup> groups; // only groups of size >= 2
    long long classified_count = 0;
    bool all_classified_singletons = false;
    std::vector<SuiteResult> suites;

    bool passed() const { return all_classified_singletons; }
};

struct PropertyReport {
    int n = 0;
    long long count = 0; // graphs examined
    std::vector<SuiteResult> suites;

    bool passed() const;
};

/// Exhaustive m(dl_1) classification at order n (4 <= n <= 9 built-in, or a
/// graph6 corpus), compared against the predicted member list.
ClassificationReport classify_sweep(int n, const SweepOptions& options = {});

/// Groups all enumerated connected graphs by distance-Laplacian
/// characteristic polynomial and checks each classified member is alone in
/// its group.
CospectralReport ds_check(int n, const SweepOptions& options = {});

/// Runs every applicable structural/spectral invariant at order n,
/// exhaustively where stated and seeded-sampled otherwise.
PropertyReport property_suite(int n, int sample_budget, std::uint64_t seed,
                              const SweepOptions& options = {});

/// Closed-form family spectra against computed spectra for every valid
/// order up to max_n, plus family structure and distinctness checks.
PropertyReport formulas_check(int max_n);

/// Numeric Cauchy interlacing of the distance-Laplacian principal submatrix
/// on the given vertex subset, tolerance 1e-7.
bool interlacing_check(const Graph& g, std::span<const int> subset);

/// Representatives of all graphs (connected or not) on n vertices, built as
/// disjoint unions of connected classes. n <= 7.
std::vector<Graph> all_graph_classes(int n);

std::string to_json(const ClassificationReport& r);
std::string to_json(const CospectralReport& r);
std::string to_json(const PropertyReport& r);
std::string to_csv(const ClassificationReport& r);
std::string to_csv(const CospectralReport& r);
std::string to_csv(const PropertyReport& r);
std::string to_text(const ClassificationReport& r);
std::string to_text(const CospectralReport& r);
std::string to_text(const PropertyReport& r);

} // namespace dlm

#endif
