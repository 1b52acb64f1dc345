#include "doctest.h"

#include <cmath>

#include "dlmkit/families.hpp"
#include "dlmkit/jacobi.hpp"
#include "dlmkit/spectra.hpp"

using dlm::Family;
using dlm::Graph;
using dlm::IntSymMatrix;

TEST_CASE("diagonal matrices come back sorted") {
    IntSymMatrix m(3);
    m.set(0, 0, 1);
    m.set(1, 1, 2);
    m.set(2, 2, 3);
    const auto vals = dlm::numeric_eigenvalues(m);
    CHECK(vals[0] == doctest::Approx(3.0));
    CHECK(vals[1] == doctest::Approx(2.0));
    CHECK(vals[2] == doctest::Approx(1.0));
}

TEST_CASE("distance Laplacian eigenvalues numerically") {
    SUBCASE("K_3 is about {3, 3, 0}") {
        const auto vals = dlm::numeric_eigenvalues(dlm::distance_laplacian(Graph::complete(3)));
        CHECK(vals[0] == doctest::Approx(3.0).epsilon(1e-10));
        CHECK(vals[1] == doctest::Approx(3.0).epsilon(1e-10));
        CHECK(vals[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    }
    SUBCASE("K_{2,4} is about {10,10,10,8,6,0}") {
        const Graph g = dlm::build({.family = Family::complete_multipartite, .parts = {2, 4}});
        const auto vals = dlm::numeric_eigenvalues(dlm::distance_laplacian(g));
        const double expect[] = {10, 10, 10, 8, 6, 0};
        for (int i = 0; i < 6; ++i) {
            CHECK(std::abs(vals[static_cast<std::size_t>(i)] - expect[i]) < 1e-9);
        }
    }
}

TEST_CASE("numeric values track exact roots within the stated tolerance") {
    for (const Graph& g : {dlm::build({.family = Family::cycle, .n = 5}),
                           dlm::build({.family = Family::path, .n = 6}),
                           dlm::build({.family = Family::star_plus_edge, .n = 6})}) {
        const IntSymMatrix m = dlm::distance_laplacian(g);
        const auto numeric = dlm::numeric_eigenvalues(m);
        const auto exact = dlm::dl_spectrum(g).approx_descending();
        const double tol = 1e-8 * (1.0 + g.order() * m.max_abs_entry().get_d());
        REQUIRE(numeric.size() == exact.size());
        for (std::size_t i = 0; i < numeric.size(); ++i) {
            CHECK(std::abs(numeric[i] - exact[i]) <= tol);
        }
    }
}

TEST_CASE("eigenvectors satisfy the residual equation") {
    const Graph g = dlm::build({.family = Family::complete_multipartite, .parts = {2, 4}});
    const IntSymMatrix m = dlm::distance_laplacian(g);
    const dlm::JacobiResult r = dlm::jacobi_eigen(m);
    const int n = m.order();
    for (std::size_t k = 0; k < r.values.size(); ++k) {
        double resid = 0;
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            for (int j = 0; j < n; ++j) {
                acc += m.at(i, j).get_d() * r.vectors[k][static_cast<std::size_t>(j)];
            }
            acc -= r.values[k] * r.vectors[k][static_cast<std::size_t>(i)];
            resid += acc * acc;
        }
        CHECK(std::sqrt(resid) < 1e-9);
    }
}
