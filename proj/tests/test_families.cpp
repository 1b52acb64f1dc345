#include "doctest.h"

#include <set>

#include "dlmkit/enumerate.hpp"
#include "dlmkit/families.hpp"
#include "dlmkit/patterns.hpp"
#include "dlmkit/spectra.hpp"

using dlm::ExactSpectrum;
using dlm::Family;
using dlm::FamilySpec;
using dlm::Graph;

TEST_CASE("constructions") {
    SUBCASE("J(2,1) is the I_3 pattern with the roots at distance 3") {
        const Graph j = dlm::build({.family = Family::j_graph, .a = 2, .b = 1});
        CHECK(j.order() == 5);
        CHECK(dlm::isomorphic(j, dlm::pattern_graph(dlm::Pattern::I3)));
        CHECK(dlm::distance_table(j).at(0, 3) == 3);
    }
    SUBCASE("K_{1,5}+e is the star plus one pendant-pendant edge") {
        const Graph g = dlm::build({.family = Family::star_plus_edge, .n = 6});
        CHECK(g.edge_count() == 6);
        CHECK(g.degree(0) == 5);
        CHECK(g.adjacent(1, 2));
    }
    SUBCASE("balanced tripartite") {
        const Graph g = dlm::build({.family = Family::balanced_tripartite, .n = 6});
        CHECK(g.edge_count() == 3 * 2 * 2);
        CHECK(dlm::isomorphic(
            g, dlm::build({.family = Family::complete_multipartite, .parts = {2, 2, 2}})));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(dlm::build({.family = Family::balanced_tripartite, .n = 7}),
                        dlm::InvalidArgument);
        CHECK_THROWS_AS(dlm::build({.family = Family::balanced_bipartite_plus_edge, .n = 7}),
                        dlm::InvalidArgument);
        CHECK_THROWS_AS(dlm::build({.family = Family::k1_join_balanced_bipartite, .n = 6}),
                        dlm::InvalidArgument);
        CHECK_THROWS_AS(dlm::build({.family = Family::j_graph, .a = 0, .b = 2}),
                        dlm::InvalidArgument);
        CHECK_THROWS_AS(dlm::build({.family = Family::complete_multipartite, .parts = {}}),
                        dlm::InvalidArgument);
    }
}

TEST_CASE("classified member lists") {
    SUBCASE("n=6 has five members") {
        const auto members = dlm::classified_family_members(6);
        REQUIRE(members.size() == 5);
        std::set<Family> fams;
        for (const auto& [spec, g] : members) fams.insert(spec.family);
        CHECK(fams == std::set<Family>{Family::complete_multipartite, Family::star_plus_edge,
                                       Family::balanced_bipartite_plus_edge,
                                       Family::k2_join_empty, Family::balanced_tripartite});
    }
    SUBCASE("n=7 has four members") {
        const auto members = dlm::classified_family_members(7);
        REQUIRE(members.size() == 4);
        std::set<Family> fams;
        for (const auto& [spec, g] : members) fams.insert(spec.family);
        CHECK(fams == std::set<Family>{Family::complete_multipartite, Family::star_plus_edge,
                                       Family::k2_join_empty,
                                       Family::k1_join_balanced_bipartite});
    }
    SUBCASE("parity filtering: five families at even n, never six at once") {
        // The even-only K_{n/2,n/2}+e and the odd-only K_1 v K_{(n-1)/2,(n-1)/2}
        // are mutually exclusive, so no single order carries all six.
        CHECK(dlm::classified_family_members(12).size() == 5);
        CHECK(dlm::classified_family_members(15).size() == 5);
        CHECK(dlm::classified_family_members(11).size() == 4);
    }
    SUBCASE("members are pairwise non-isomorphic") {
        for (int n = 6; n <= 10; ++n) {
            const auto members = dlm::classified_family_members(n);
            std::set<dlm::CanonicalForm> canon;
            for (const auto& [spec, g] : members) canon.insert(dlm::canonical_form(g));
            CHECK(canon.size() == members.size());
        }
    }
    CHECK_THROWS_AS(dlm::classified_family_members(5), dlm::InvalidArgument);
}

TEST_CASE("small-n member lists") {
    const auto four = dlm::small_n_members(4);
    REQUIRE(four.size() == 3);
    CHECK(dlm::isomorphic(four[0].second, dlm::build({.family = Family::path, .n = 4})));

    const auto five = dlm::small_n_members(5);
    REQUIRE(five.size() == 5);
    bool has_c5 = false;
    for (const auto& [name, g] : five) {
        if (dlm::isomorphic(g, dlm::build({.family = Family::cycle, .n = 5}))) has_c5 = true;
    }
    CHECK(has_c5);

    CHECK_THROWS_AS(dlm::small_n_members(6), dlm::InvalidArgument);
}

TEST_CASE("closed-form spectra match the stated values") {
    SUBCASE("K_{2,6} at n=8: {14^5, 10, 8, 0}") {
        const ExactSpectrum s = dlm::closed_form_dl_spectrum(
            {.family = Family::complete_multipartite, .n = 8, .parts = {2, 6}});
        CHECK(s.multiplicity_of_integer(14) == 5);
        CHECK(s.multiplicity_of_integer(10) == 1);
        CHECK(s.multiplicity_of_integer(8) == 1);
        CHECK(s.multiplicity_of_integer(0) == 1);
    }
    SUBCASE("K_{1,5}+e at n=6: {11^3, 9, 6, 0}") {
        const ExactSpectrum s =
            dlm::closed_form_dl_spectrum({.family = Family::star_plus_edge, .n = 6});
        CHECK(s.multiplicity_of_integer(11) == 3);
        CHECK(s.multiplicity_of_integer(9) == 1);
        CHECK(s.multiplicity_of_integer(6) == 1);
    }
    SUBCASE("K_1 v K_{3,3} at n=7: {10^4, 7^2, 0}") {
        const ExactSpectrum s =
            dlm::closed_form_dl_spectrum({.family = Family::k1_join_balanced_bipartite, .n = 7});
        CHECK(s.multiplicity_of_integer(10) == 4);
        CHECK(s.multiplicity_of_integer(7) == 2);
    }
    SUBCASE("no closed form outside the six families") {
        CHECK_THROWS_AS(dlm::closed_form_dl_spectrum({.family = Family::path, .n = 6}),
                        dlm::InvalidArgument);
        CHECK_THROWS_AS(dlm::closed_form_dl_spectrum(
                            {.family = Family::complete_multipartite, .n = 9, .parts = {3, 6}}),
                        dlm::InvalidArgument);
    }
}

TEST_CASE("computed spectra equal the closed forms for every valid n up to 10") {
    for (int n = 6; n <= 10; ++n) {
        for (const auto& [spec, g] : dlm::classified_family_members(n)) {
            CHECK(dlm::dl_spectrum(g) == dlm::closed_form_dl_spectrum(spec));
        }
    }
}

TEST_CASE("family name round trip") {
    for (Family f : {Family::complete, Family::path, Family::cycle, Family::star,
                     Family::complete_multipartite, Family::star_plus_edge,
                     Family::balanced_bipartite_plus_edge, Family::k2_join_empty,
                     Family::k1_join_balanced_bipartite, Family::balanced_tripartite,
                     Family::j_graph}) {
        const auto back = dlm::family_from_name(dlm::family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(dlm::family_from_name("nonsense").has_value());
}
