#include "dlmkit/spectra.hpp"

namespace dlm {

IntSymMatrix distance_laplacian(const Graph& g) {
    const DistanceTable t = distance_table(g);
    const int n = g.order();
    IntSymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, mpz_class(static_cast<long>(t.row_sum(i))));
        for (int j = i + 1; j < n; ++j) m.set(i, j, mpz_class(-t.at(i, j)));
    }
    return m;
}

IntSymMatrix laplacian(const Graph& g) {
    const int n = g.order();
    IntSymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, mpz_class(g.degree(i)));
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) m.set(i, j, mpz_class(-1));
        }
    }
    return m;
}

ExactSpectrum dl_spectrum(const Graph& g) {
    return ExactSpectrum::of_matrix(distance_laplacian(g));
}

ExactSpectrum laplacian_spectrum(const Graph& g) {
    return ExactSpectrum::of_matrix(laplacian(g));
}

namespace {

const IntPoly kX = IntPoly::monomial(1, 1);

// Split p = x * q; any Laplacian-type polynomial of a graph has 0 as a root.
IntPoly strip_zero_root(const IntPoly& p, const char* what) {
    if (p.coeff(0) != 0) throw InvalidArgument(std::string(what) + ": 0 is not an eigenvalue");
    return p.divide_exact(kX);
}

// q(shift - x), monicized.
IntPoly reflect_monic(const IntPoly& q, const mpz_class& shift) {
    IntPoly r = q.compose_linear(shift, -1);
    if (r.leading() < 0) r = -r;
    return r;
}

void check_laplacian_spectrum(const ExactSpectrum& s, int n, const char* what) {
    if (s.order() != n) {
        throw InvalidArgument(std::string(what) + ": spectrum order does not match n");
    }
    if (s.multiplicity_of_integer(0) < 1) {
        throw InvalidArgument(std::string(what) + ": Laplacian spectrum must contain 0");
    }
    if (ExactSpectrum::compare_entry_to_integer(s, s.largest(), mpz_class(n)) > 0) {
        throw InvalidArgument(std::string(what) + ": Laplacian eigenvalue exceeds n");
    }
}

} // namespace

ExactSpectrum dl_spectrum_from_laplacian(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraph("diameter-2 transfer requires a connected graph");
    const int n = g.order();
    if (diameter(g) > 2) {
        throw DiameterTooLarge("diameter-2 spectral transfer applied to a graph of diameter > 2");
    }
    const IntPoly p = char_poly(laplacian(g));
    const IntPoly q = strip_zero_root(p, "laplacian char poly");
    // Nonzero Laplacian eigenvalues mu map to 2n - mu; 0 is re-appended.
    const IntPoly transferred = reflect_monic(q, mpz_class(2 * n)).shift_up(1);
    return ExactSpectrum::from_char_poly(transferred);
}

ExactSpectrum complement_laplacian_spectrum(const ExactSpectrum& s, int n) {
    check_laplacian_spectrum(s, n, "complement rule");
    const IntPoly q = strip_zero_root(s.char_polynomial(), "complement rule");
    return ExactSpectrum::from_char_poly(reflect_monic(q, mpz_class(n)).shift_up(1));
}

ExactSpectrum join_laplacian_spectrum(const ExactSpectrum& sg, int n, const ExactSpectrum& sh,
                                      int m) {
    check_laplacian_spectrum(sg, n, "join rule (first argument)");
    check_laplacian_spectrum(sh, m, "join rule (second argument)");
    if (n + m > kMaxVertices) throw InvalidArgument("join rule: combined order exceeds the cap");
    const IntPoly qg = strip_zero_root(sg.char_polynomial(), "join rule");
    const IntPoly qh = strip_zero_root(sh.char_polynomial(), "join rule");
    // {n+m} u {m + mu_i : i < n} u {n + mu'_j : j < m} u {0}.
    const IntPoly shifted_g = qg.compose_linear(mpz_class(-m), 1);
    const IntPoly shifted_h = qh.compose_linear(mpz_class(-n), 1);
    IntPoly top{std::vector<mpz_class>{mpz_class(-(n + m)), mpz_class(1)}};
    const IntPoly joined = (shifted_g * shifted_h * top).shift_up(1);
    return ExactSpectrum::from_char_poly(joined);
}

std::string spectrum_key(const Graph& g) {
    return ExactSpectrum::of_matrix(distance_laplacian(g)).key();
}

} // namespace dlm
