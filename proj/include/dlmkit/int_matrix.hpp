#ifndef DLMKIT_INT_MATRIX_HPP
#define DLMKIT_INT_MATRIX_HPP

#include <gmpxx.h>

#include <span>
#include <vector>

#include "dlmkit/errors.hpp"
#include "dlmkit/poly.hpp"

namespace dlm {

/// Dense symmetric matrix of arbitrary-precision integers. set() writes both
/// mirror entries, so symmetry holds by construction.
class IntSymMatrix {
public:
    explicit IntSymMatrix(int n);

    int order() const { return n_; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, mpz_class v);

    static IntSymMatrix diagonal(std::span<const mpz_class> d);

    /// Rows/columns restricted to the given index set (ascending, distinct).
    IntSymMatrix principal_submatrix(std::span<const int> keep) const;

    mpz_class max_abs_entry() const;

private:
    int n_;
    std::vector<mpz_class> a_;
};

/// Exact characteristic polynomial det(xI - A), monic, via the Berkowitz
/// division-free scheme.
IntPoly char_poly(const IntSymMatrix& a);

} // namespace dlm

#endif
