#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "dlmkit.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    dlm_string_free(s);
    return out;
}

} // namespace

TEST_CASE("graph construction and encoding through the C API") {
    dlm_graph* g = nullptr;
    REQUIRE(dlm_graph_from_g6("Bw", &g) == DLM_OK);
    CHECK(dlm_graph_order(g) == 3);
    CHECK(dlm_graph_edge_count(g) == 3);
    CHECK(dlm_graph_is_connected(g) == 1);
    CHECK(dlm_graph_diameter(g) == 1);
    char* g6 = nullptr;
    REQUIRE(dlm_graph_to_g6(g, &g6) == DLM_OK);
    CHECK(take(g6) == "Bw");
    dlm_graph_free(g);

    const int endpoints[] = {0, 1, 1, 2, 2, 3};
    dlm_graph* p4 = nullptr;
    REQUIRE(dlm_graph_from_edges(4, endpoints, 3, &p4) == DLM_OK);
    CHECK(dlm_graph_diameter(p4) == 3);
    int64_t tr[4] = {0, 0, 0, 0};
    REQUIRE(dlm_graph_transmissions(p4, tr) == DLM_OK);
    CHECK(tr[0] == 6);
    CHECK(tr[1] == 4);
    dlm_graph_free(p4);
}

TEST_CASE("error reporting") {
    dlm_graph* g = nullptr;
    CHECK(dlm_graph_from_g6("!!", &g) == DLM_ERR_PARSE);
    CHECK(std::strlen(dlm_last_error()) > 0);

    const int loop[] = {1, 1};
    CHECK(dlm_graph_from_edges(3, loop, 1, &g) == DLM_ERR_INVALID_ARGUMENT);

    // Disconnected graph: distance-based calls refuse.
    const int split[] = {0, 1, 2, 3};
    dlm_graph* disc = nullptr;
    REQUIRE(dlm_graph_from_edges(4, split, 2, &disc) == DLM_OK);
    CHECK(dlm_graph_is_connected(disc) == 0);
    CHECK(dlm_graph_diameter(disc) == -1);
    int64_t tr[4];
    CHECK(dlm_graph_transmissions(disc, tr) == DLM_ERR_DISCONNECTED);
    dlm_spectrum* s = nullptr;
    CHECK(dlm_spectrum_compute(disc, "dl", &s) == DLM_ERR_DISCONNECTED);
    dlm_graph_free(disc);

    CHECK(dlm_graph_family("no-such-family", 5, 0, 0, nullptr, 0, &g) ==
          DLM_ERR_INVALID_ARGUMENT);
    CHECK(dlm_graph_family("balanced-tripartite", 7, 0, 0, nullptr, 0, &g) ==
          DLM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("spectra through the C API") {
    const int parts[] = {2, 4};
    dlm_graph* k24 = nullptr;
    REQUIRE(dlm_graph_family("complete-multipartite", 0, 0, 0, parts, 2, &k24) == DLM_OK);
    dlm_spectrum* s = nullptr;
    REQUIRE(dlm_spectrum_compute(k24, "dl", &s) == DLM_OK);
    CHECK(dlm_spectrum_order(s) == 6);
    REQUIRE(dlm_spectrum_distinct_count(s) == 4);
    CHECK(dlm_spectrum_multiplicity(s, 0) == 3);
    CHECK(dlm_spectrum_root_is_integer(s, 0) == 1);
    int64_t top = 0;
    REQUIRE(dlm_spectrum_root_integer(s, 0, &top) == DLM_OK);
    CHECK(top == 10);
    CHECK(dlm_spectrum_root_approx(s, 1) == doctest::Approx(8.0));

    char* text = nullptr;
    REQUIRE(dlm_spectrum_render(s, "text", &text) == DLM_OK);
    CHECK(take(text) == "10×3, 8, 6, 0");

    char* poly = nullptr;
    REQUIRE(dlm_spectrum_char_poly(s, &poly) == DLM_OK);
    const std::string coeffs = take(poly);
    CHECK(coeffs.find(',') != std::string::npos);
    CHECK(coeffs.back() == '1'); // monic

    char* lo = nullptr;
    char* hi = nullptr;
    REQUIRE(dlm_spectrum_root_interval(s, 0, &lo, &hi) == DLM_OK);
    CHECK(take(lo) == "10/1");
    CHECK(take(hi) == "10/1");

    dlm_spectrum* again = nullptr;
    REQUIRE(dlm_spectrum_compute(k24, "dl", &again) == DLM_OK);
    CHECK(dlm_spectrum_equal(s, again) == 1);
    dlm_spectrum* lap = nullptr;
    REQUIRE(dlm_spectrum_compute(k24, "l", &lap) == DLM_OK);
    CHECK(dlm_spectrum_equal(s, lap) == 0);

    dlm_spectrum_free(s);
    dlm_spectrum_free(again);
    dlm_spectrum_free(lap);
    dlm_graph_free(k24);
}

TEST_CASE("irrational roots expose exact intervals") {
    dlm_graph* c5 = nullptr;
    REQUIRE(dlm_graph_family("cycle", 5, 0, 0, nullptr, 0, &c5) == DLM_OK);
    dlm_spectrum* s = nullptr;
    REQUIRE(dlm_spectrum_compute(c5, "dl", &s) == DLM_OK);
    CHECK(dlm_spectrum_root_is_integer(s, 0) == 0);
    int64_t v = 0;
    CHECK(dlm_spectrum_root_integer(s, 0, &v) == DLM_ERR_INVALID_ARGUMENT);
    char* lo = nullptr;
    char* hi = nullptr;
    REQUIRE(dlm_spectrum_root_interval(s, 0, &lo, &hi) == DLM_OK);
    const std::string slo = take(lo);
    const std::string shi = take(hi);
    CHECK(slo.find('/') != std::string::npos);
    CHECK(shi.find('/') != std::string::npos);
    CHECK(dlm_spectrum_root_approx(s, 0) == doctest::Approx(8.6180339887).epsilon(1e-6));
    dlm_spectrum_free(s);
    dlm_graph_free(c5);
}

TEST_CASE("iteration, patterns and recognition") {
    dlm_graph_iter* it = nullptr;
    REQUIRE(dlm_enumerate_connected(4, &it) == DLM_OK);
    int count = 0;
    dlm_graph* g = nullptr;
    while (dlm_graph_iter_next(it, &g)) {
        ++count;
        dlm_graph_free(g);
    }
    dlm_graph_iter_free(it);
    CHECK(count == 6);

    REQUIRE(dlm_family_classified(7, &it) == DLM_OK);
    count = 0;
    while (dlm_graph_iter_next(it, &g)) {
        ++count;
        dlm_graph_free(g);
    }
    dlm_graph_iter_free(it);
    CHECK(count == 4);

    dlm_graph* i3 = nullptr;
    REQUIRE(dlm_pattern("I3", &i3) == DLM_OK);
    int a = 0, b = 0;
    CHECK(dlm_graph_j_recognize(i3, &a, &b) == 1);
    CHECK(a == 2);
    CHECK(b == 1);

    dlm_graph* jg = nullptr;
    REQUIRE(dlm_graph_family("j-graph", 0, 2, 1, nullptr, 0, &jg) == DLM_OK);
    CHECK(dlm_graph_isomorphic(i3, jg) == 1);
    CHECK(dlm_graph_contains_induced(jg, i3) == 1);
    CHECK(dlm_graph_is_cograph(jg) == 0);

    char* canon_a = nullptr;
    char* canon_b = nullptr;
    REQUIRE(dlm_graph_canonical_g6(i3, &canon_a) == DLM_OK);
    REQUIRE(dlm_graph_canonical_g6(jg, &canon_b) == DLM_OK);
    CHECK(take(canon_a) == take(canon_b));

    dlm_graph_free(i3);
    dlm_graph_free(jg);
}

TEST_CASE("verification runs through the C API") {
    dlm_verify_opts opts{};
    opts.n = 6;
    opts.workers = 1;
    dlm_report* rep = nullptr;
    REQUIRE(dlm_verify_run("thm33", &opts, &rep) == DLM_OK);
    CHECK(dlm_report_passed(rep) == 1);
    char* json = nullptr;
    REQUIRE(dlm_report_render(rep, "json", &json) == DLM_OK);
    const std::string doc = take(json);
    CHECK(doc.find("\"verdict\": \"match\"") != std::string::npos);
    dlm_report_free(rep);

    REQUIRE(dlm_verify_run("remark45", &opts, &rep) == DLM_OK);
    CHECK(dlm_report_passed(rep) == 1);
    dlm_report_free(rep);

    CHECK(dlm_verify_run("nonsense", &opts, &rep) == DLM_ERR_INVALID_ARGUMENT);
}
