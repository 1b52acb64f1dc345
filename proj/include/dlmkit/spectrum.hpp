#ifndef DLMKIT_SPECTRUM_HPP
#define DLMKIT_SPECTRUM_HPP

#include <string>
#include <utility>
#include <vector>

#include "dlmkit/int_matrix.hpp"
#include "dlmkit/poly.hpp"

namespace dlm {

/// Exact eigenvalue list of an integer symmetric matrix: distinct roots in
/// descending order with exact multiplicities from the squarefree
/// decomposition of the characteristic polynomial. Roots are exact integers
/// or isolating intervals of width <= 2^-40; two spectra are equal iff their
/// characteristic polynomials are identical.
class ExactSpectrum {
public:
    struct Entry {
        RealRoot root;
        int multiplicity = 0;
        int factor_index = -1; // owning squarefree factor; -1 only transiently
    };

    /// p must be monic of degree >= 1 with all roots real.
    static ExactSpectrum from_char_poly(IntPoly p);
    static ExactSpectrum of_matrix(const IntSymMatrix& m);

    int order() const { return order_; }
    const IntPoly& char_polynomial() const { return poly_; }
    const std::vector<std::pair<IntPoly, int>>& squarefree_factors() const { return factors_; }
    const std::vector<Entry>& entries() const { return entries_; }

    const Entry& largest() const { return entries_.front(); }
    int distinct_count() const { return static_cast<int>(entries_.size()); }

    /// Exact multiplicity of the integer v as an eigenvalue (0 if absent).
    int multiplicity_of_integer(const mpz_class& v) const;

    /// The owning squarefree polynomial of an entry.
    const IntPoly& owner(const Entry& e) const;

    /// Eigenvalues expanded with multiplicity, descending, as doubles
    /// (interval midpoints for irrational roots).
    std::vector<double> approx_descending() const;

    /// Exact multiset equality.
    bool operator==(const ExactSpectrum& o) const {
        return order_ == o.order_ && poly_ == o.poly_;
    }

    /// Canonical byte encoding of the characteristic polynomial coefficients.
    std::string key() const;

    /// -1/0/+1 comparison of entry ai of a against entry bi of b, exact.
    static int compare_entries(const ExactSpectrum& a, const Entry& ea, const ExactSpectrum& b,
                               const Entry& eb);
    /// Compare an entry against an exact integer.
    static int compare_entry_to_integer(const ExactSpectrum& a, const Entry& e, const mpz_class& k);

private:
    int order_ = 0;
    IntPoly poly_;
    std::vector<std::pair<IntPoly, int>> factors_;
    std::vector<Entry> entries_;
};

/// Pair (root, multiplicity) for the largest eigenvalue.
inline const ExactSpectrum::Entry& largest_multiplicity(const ExactSpectrum& s) {
    return s.largest();
}

} // namespace dlm

#endif
