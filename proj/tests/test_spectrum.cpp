#include "doctest.h"

#include "dlmkit/families.hpp"
#include "dlmkit/spectra.hpp"
#include "dlmkit/spectrum.hpp"

using dlm::ExactSpectrum;
using dlm::Family;
using dlm::Graph;

namespace {

void check_integer_spectrum(const ExactSpectrum& s,
                            std::initializer_list<std::pair<long, int>> expected) {
    REQUIRE(s.distinct_count() == static_cast<int>(expected.size()));
    std::size_t i = 0;
    for (const auto& [value, mult] : expected) {
        const auto& e = s.entries()[i++];
        REQUIRE(e.root.is_integer);
        CHECK(e.root.value == value);
        CHECK(e.multiplicity == mult);
    }
}

} // namespace

TEST_CASE("exact spectra of the worked examples") {
    SUBCASE("K_{2,4} has spectrum {10^3, 8, 6, 0}") {
        const Graph g = dlm::build({.family = Family::complete_multipartite, .parts = {2, 4}});
        check_integer_spectrum(dlm::dl_spectrum(g), {{10, 3}, {8, 1}, {6, 1}, {0, 1}});
    }
    SUBCASE("K_{2,2,2} has spectrum {8^3, 6^2, 0}") {
        const Graph g = dlm::build({.family = Family::balanced_tripartite, .n = 6});
        check_integer_spectrum(dlm::dl_spectrum(g), {{8, 3}, {6, 2}, {0, 1}});
    }
    SUBCASE("K_4 has spectrum {4^3, 0}") {
        check_integer_spectrum(dlm::dl_spectrum(Graph::complete(4)), {{4, 3}, {0, 1}});
    }
}

TEST_CASE("largest eigenvalue multiplicities") {
    SUBCASE("C_5: multiplicity 2, irrational value (15+sqrt5)/2") {
        const ExactSpectrum s = dlm::dl_spectrum(dlm::build({.family = Family::cycle, .n = 5}));
        const auto& top = dlm::largest_multiplicity(s);
        CHECK(top.multiplicity == 2);
        CHECK_FALSE(top.root.is_integer);
        CHECK(top.root.approx() == doctest::Approx(8.6180339887).epsilon(1e-9));
    }
    SUBCASE("P_4: multiplicity 1") {
        const ExactSpectrum s = dlm::dl_spectrum(dlm::build({.family = Family::path, .n = 4}));
        CHECK(s.largest().multiplicity == 1);
    }
    SUBCASE("K_n: multiplicity n-1") {
        for (int n = 2; n <= 6; ++n) {
            const ExactSpectrum s = dlm::dl_spectrum(Graph::complete(n));
            CHECK(s.largest().multiplicity == n - 1);
            REQUIRE(s.largest().root.is_integer);
            CHECK(s.largest().root.value == n);
        }
    }
}

TEST_CASE("spectrum invariants") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : {Graph::complete(n),
                               dlm::build({.family = Family::path, .n = n}),
                               dlm::build({.family = Family::star, .n = n})}) {
            const ExactSpectrum s = dlm::dl_spectrum(g);
            int total = 0;
            for (const auto& e : s.entries()) total += e.multiplicity;
            CHECK(total == n);
            // 0 is always an eigenvalue of multiplicity exactly 1 here.
            CHECK(s.multiplicity_of_integer(0) == 1);
            // Entries are strictly descending.
            for (std::size_t i = 0; i + 1 < s.entries().size(); ++i) {
                CHECK(ExactSpectrum::compare_entries(s, s.entries()[i], s,
                                                     s.entries()[i + 1]) > 0);
            }
        }
    }
}

TEST_CASE("interval roots respect the width bound") {
    const ExactSpectrum s = dlm::dl_spectrum(dlm::build({.family = Family::cycle, .n = 5}));
    const mpq_class width_cap(1, mpz_class(1) << 40);
    for (const auto& e : s.entries()) {
        if (!e.root.is_integer) CHECK(e.root.hi - e.root.lo <= width_cap);
    }
}

TEST_CASE("spectrum keys") {
    const Graph k24 = dlm::build({.family = Family::complete_multipartite, .parts = {2, 4}});
    const Graph k2_join = dlm::build({.family = Family::k2_join_empty, .n = 6});
    CHECK(dlm::spectrum_key(k24) != dlm::spectrum_key(k2_join));

    // Relabeling leaves the key unchanged.
    const Graph relabeled =
        Graph::from_edges(6, {{5, 3}, {5, 2}, {5, 1}, {4, 3}, {4, 2}, {4, 1}, {0, 3}, {0, 2},
                              {0, 1}});
    // That is K_{3,3}; compare against its canonical construction.
    const Graph k33 = dlm::build({.family = Family::complete_multipartite, .parts = {3, 3}});
    CHECK(dlm::spectrum_key(relabeled) == dlm::spectrum_key(k33));

    const Graph p4 = dlm::build({.family = Family::path, .n = 4});
    const Graph star4 = dlm::build({.family = Family::star, .n = 4});
    CHECK(dlm::spectrum_key(p4) != dlm::spectrum_key(star4));

    // Equal spectra compare equal as values.
    CHECK(dlm::dl_spectrum(k33) == dlm::dl_spectrum(relabeled));
    CHECK_FALSE(dlm::dl_spectrum(k24) == dlm::dl_spectrum(k2_join));
}

TEST_CASE("edge deletion comparisons across two spectra") {
    // C_5 minus an edge is P_5; sorted eigenvalues must not decrease.
    const ExactSpectrum before = dlm::dl_spectrum(dlm::build({.family = Family::cycle, .n = 5}));
    const ExactSpectrum after = dlm::dl_spectrum(dlm::build({.family = Family::path, .n = 5}));
    std::vector<const ExactSpectrum::Entry*> be, ae;
    for (const auto& e : before.entries()) {
        for (int i = 0; i < e.multiplicity; ++i) be.push_back(&e);
    }
    for (const auto& e : after.entries()) {
        for (int i = 0; i < e.multiplicity; ++i) ae.push_back(&e);
    }
    REQUIRE(be.size() == ae.size());
    for (std::size_t i = 0; i < be.size(); ++i) {
        CHECK(ExactSpectrum::compare_entries(after, *ae[i], before, *be[i]) >= 0);
    }
}
