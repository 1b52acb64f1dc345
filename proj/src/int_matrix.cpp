#include "dlmkit/int_matrix.hpp"

#include <string>

namespace dlm {

IntSymMatrix::IntSymMatrix(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("matrix order must be positive");
    a_.assign(static_cast<std::size_t>(n) * n, mpz_class(0));
}

void IntSymMatrix::set(int i, int j, mpz_class v) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InvalidArgument("matrix index out of range");
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = std::move(v);
}

IntSymMatrix IntSymMatrix::diagonal(std::span<const mpz_class> d) {
    IntSymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.order(); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
    return m;
}

IntSymMatrix IntSymMatrix::principal_submatrix(std::span<const int> keep) const {
    if (keep.empty()) throw InvalidArgument("empty principal submatrix");
    IntSymMatrix m(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n_) throw InvalidArgument("submatrix index out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw InvalidArgument("submatrix indices must be strictly ascending");
        }
        for (std::size_t j = i; j < keep.size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), at(keep[i], keep[j]));
        }
    }
    return m;
}

mpz_class IntSymMatrix::max_abs_entry() const {
    mpz_class m = 0;
    for (const auto& v : a_) {
        mpz_class a = abs(v);
        if (a > m) m = a;
    }
    return m;
}

IntPoly char_poly(const IntSymMatrix& a) {
    const int n = a.order();
    // Berkowitz vectors hold coefficients leading-first for the growing
    // leading principal submatrix.
    std::vector<mpz_class> v = {mpz_class(1), -a.at(0, 0)};
    std::vector<mpz_class> s, u, w, next;
    for (int r = 2; r <= n; ++r) {
        // s[0..r]: 1, -a_rr, then -(R M^(j-2) C) where M is the leading
        // (r-1) block, R the new row, C the new column.
        s.assign(static_cast<std::size_t>(r) + 1, mpz_class(0));
        s[0] = 1;
        s[1] = -a.at(r - 1, r - 1);
        u.assign(static_cast<std::size_t>(r) - 1, mpz_class(0));
        for (int i = 0; i < r - 1; ++i) u[static_cast<std::size_t>(i)] = a.at(i, r - 1);
        for (int j = 2; j <= r; ++j) {
            mpz_class dot = 0;
            for (int i = 0; i < r - 1; ++i) {
                mpz_addmul(dot.get_mpz_t(), a.at(r - 1, i).get_mpz_t(),
                           u[static_cast<std::size_t>(i)].get_mpz_t());
            }
            s[static_cast<std::size_t>(j)] = -dot;
            if (j == r) break;
            w.assign(static_cast<std::size_t>(r) - 1, mpz_class(0));
            for (int i = 0; i < r - 1; ++i) {
                for (int k = 0; k < r - 1; ++k) {
                    mpz_addmul(w[static_cast<std::size_t>(i)].get_mpz_t(),
                               a.at(i, k).get_mpz_t(), u[static_cast<std::size_t>(k)].get_mpz_t());
                }
            }
            std::swap(u, w);
        }
        // next = T * v with the lower-triangular Toeplitz T[p][q] = s[p-q].
        next.assign(static_cast<std::size_t>(r) + 1, mpz_class(0));
        for (int p = 0; p <= r; ++p) {
            mpz_class& acc = next[static_cast<std::size_t>(p)];
            for (int q = 0; q < r && q <= p; ++q) {
                mpz_addmul(acc.get_mpz_t(), s[static_cast<std::size_t>(p - q)].get_mpz_t(),
                           v[static_cast<std::size_t>(q)].get_mpz_t());
            }
        }
        std::swap(v, next);
    }
    // v is leading-first; IntPoly wants low degree first.
    std::vector<mpz_class> coeffs(v.rbegin(), v.rend());
    return IntPoly(std::move(coeffs));
}

} // namespace dlm
