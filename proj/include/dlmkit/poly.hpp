#ifndef DLMKIT_POLY_HPP
#define DLMKIT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "dlmkit/errors.hpp"

namespace dlm {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored low degree first. The zero polynomial has an empty coefficient
/// vector; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(mpz_class v);
    /// x^k with coefficient c.
    static IntPoly monomial(mpz_class c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const mpz_class& leading() const { return c_.back(); }
    /// Coefficient of x^i (0 beyond the degree).
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const = default;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;
    /// Sign of p(num/den), den > 0, computed exactly (homogeneous evaluation).
    int sign_at(const mpz_class& num, const mpz_class& den) const;
    int sign_at(const mpq_class& x) const;

    /// gcd of the coefficients, with the sign of the leading coefficient;
    /// 0 for the zero polynomial.
    mpz_class content() const;
    /// p / content(p); the zero polynomial stays zero.
    IntPoly primitive_part() const;

    /// p(c + s*x) for s in {+1,-1}.
    IntPoly compose_linear(const mpz_class& c, int s) const;
    /// p(x) * x^k.
    IntPoly shift_up(int k) const;

    /// Exact division; throws InvalidArgument if the division is not exact
    /// over the integers.
    IntPoly divide_exact(const IntPoly& divisor) const;

    /// "c0,c1,...,cn" decimal rendering.
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Yun squarefree decomposition of a nonzero polynomial:
/// p = content * prod f_i^{e_i} with the f_i primitive, squarefree, pairwise
/// coprime, positive leading coefficients, and e_i strictly increasing.
/// Constant factors are dropped.
std::vector<std::pair<IntPoly, int>> squarefree_decompose(const IntPoly& p);

/// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& squarefree);
    /// Sign variations at x; with f(a), f(b) nonzero, variations(a)-variations(b)
    /// counts the real roots in (a, b].
    int variations(const mpq_class& x) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;
    int root_count(const mpq_class& lo, const mpq_class& hi) const;
    int total_real_roots() const;

private:
    std::vector<IntPoly> chain_;
};

/// A real algebraic number: either an exact integer, or an open isolating
/// interval (lo, hi) of a squarefree polynomial with exactly one root inside
/// and nonzero values at both endpoints.
struct RealRoot {
    bool is_integer = false;
    mpz_class value;  // when is_integer
    mpq_class lo, hi; // otherwise
    double approx() const;
};

/// Isolates all real roots of a squarefree polynomial, ascending. Intervals
/// are refined to width <= 2^-40; roots that are integers are detected by
/// exact evaluation (after a divisibility pre-filter on the trailing nonzero
/// coefficient) and reported exactly.
std::vector<RealRoot> isolate_real_roots(const IntPoly& squarefree);

/// Halves the isolating interval around the root (no-op for integers).
void refine_root(const IntPoly& squarefree, RealRoot& r);

/// Exact three-way comparison of two real algebraic numbers given by their
/// owning squarefree polynomials. Intervals are refined until the order is
/// decided; at width 2^-80 a gcd of the owners decides equality exactly.
int compare_real_roots(const IntPoly& fa, const RealRoot& a, const IntPoly& fb, const RealRoot& b);

/// Compare a root against an exact integer.
int compare_root_to_integer(const IntPoly& f, const RealRoot& r, const mpz_class& k);

} // namespace dlm

#endif
