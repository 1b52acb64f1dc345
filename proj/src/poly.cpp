#include "dlmkit/poly.hpp"

#include <algorithm>

namespace dlm {

namespace {

const mpz_class kZero = 0;

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class v) {
    std::vector<mpz_class> c;
    if (v != 0) c.push_back(std::move(v));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(mpz_class c, int k) {
    if (c == 0) return IntPoly();
    std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1, mpz_class(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

int IntPoly::sign_at(const mpz_class& num, const mpz_class& den) const {
    if (is_zero()) return 0;
    // Homogeneous Horner: sum c_i num^i den^(d-i).
    mpz_class acc = c_.back();
    mpz_class denpow = 1;
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        denpow *= den;
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), c_[i].get_mpz_t(), denpow.get_mpz_t());
    }
    return sgn(acc);
}

int IntPoly::sign_at(const mpq_class& x) const {
    return sign_at(x.get_num(), x.get_den());
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    const mpz_class g = content();
    std::vector<mpz_class> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_linear(const mpz_class& c, int s) const {
    // Horner on (c + s*x).
    IntPoly result;
    std::vector<mpz_class> lin = {c, mpz_class(s)};
    const IntPoly linp{std::vector<mpz_class>(lin)};
    for (std::size_t i = c_.size(); i-- > 0;) {
        result = result * linp + IntPoly::constant(c_[i]);
    }
    return result;
}

IntPoly IntPoly::shift_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<mpz_class> r(c_.size() + static_cast<std::size_t>(k), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) throw InvalidArgument("non-exact polynomial division");
    std::vector<mpz_class> rem(c_);
    std::vector<mpz_class> quot(c_.size() - divisor.c_.size() + 1, mpz_class(0));
    const mpz_class& lead = divisor.leading();
    for (std::size_t e = quot.size(); e-- > 0;) {
        mpz_class& top = rem[e + divisor.c_.size() - 1];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw InvalidArgument("non-exact polynomial division");
        quot[e] = q;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
            mpz_submul(rem[e + i].get_mpz_t(), q.get_mpz_t(), divisor.c_[i].get_mpz_t());
        }
    }
    for (const auto& v : rem) {
        if (v != 0) throw InvalidArgument("non-exact polynomial division");
    }
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += c_[i].get_str();
    }
    return out;
}

namespace {

// Pseudo-remainder scaled by a positive constant, so signs match the true
// rational remainder of a by b.
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const mpz_class& l = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int e = r.degree() - b.degree();
        const mpz_class top = r.leading();
        if (l > 0) {
            r = r * l - b.shift_up(e) * top;
        } else {
            r = r * (-l) + b.shift_up(e) * top;
        }
    }
    return r;
}

// Divide by |content|: positive scaling only, signs preserved.
IntPoly scale_down_pos(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (c < 0) c = -c;
    if (c == 1) return p;
    std::vector<mpz_class> r(p.coeffs());
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(r));
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    if (ca < 0) ca = -ca;
    if (cb < 0) cb = -cb;
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    IntPoly x = a.is_zero() ? IntPoly() : a.primitive_part();
    IntPoly y = b.is_zero() ? IntPoly() : b.primitive_part();
    if (x.is_zero()) return y * cg;
    if (y.is_zero()) return x * cg;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = signed_prem(x, y);
        x = std::move(y);
        y = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (x.leading() < 0) x = -x;
    return x * cg;
}

std::vector<std::pair<IntPoly, int>> squarefree_decompose(const IntPoly& p) {
    if (p.is_zero()) throw InvalidArgument("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly a = p.primitive_part();
    if (a.degree() == 0) return out;

    // Yun's algorithm over the primitive part.
    const IntPoly ap = a.derivative();
    IntPoly g = poly_gcd(a, ap);
    IntPoly c = a.divide_exact(g);
    IntPoly d = ap.divide_exact(g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        IntPoly f = poly_gcd(c, d);
        if (f.degree() > 0) out.emplace_back(f, i);
        c = c.divide_exact(f);
        d = d.divide_exact(f) - c.derivative();
    }
    return out;
}

SturmChain::SturmChain(const IntPoly& squarefree) {
    chain_.push_back(scale_down_pos(squarefree));
    IntPoly d = squarefree.derivative();
    if (d.is_zero()) return;
    chain_.push_back(scale_down_pos(d));
    while (chain_.back().degree() > 0) {
        IntPoly r = signed_prem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(scale_down_pos(-r));
    }
}

int SturmChain::variations(const mpq_class& x) const {
    int prev = 0;
    int v = 0;
    for (const auto& p : chain_) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_at_minus_inf() const {
    int prev = 0;
    int v = 0;
    for (const auto& p : chain_) {
        if (p.is_zero()) continue;
        int s = sgn(p.leading());
        if (p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::variations_at_plus_inf() const {
    int prev = 0;
    int v = 0;
    for (const auto& p : chain_) {
        if (p.is_zero()) continue;
        const int s = sgn(p.leading());
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::root_count(const mpq_class& lo, const mpq_class& hi) const {
    return variations(lo) - variations(hi);
}

int SturmChain::total_real_roots() const {
    return variations_at_minus_inf() - variations_at_plus_inf();
}

double RealRoot::approx() const {
    if (is_integer) return value.get_d();
    return mpq_class((lo + hi) / 2).get_d();
}

namespace {

const mpq_class kTargetWidth = make_rational(1, mpz_class(1) << 40);
const mpq_class kGcdFallbackWidth = make_rational(1, mpz_class(1) << 80);

// Cauchy bound, widened by 1 so no root sits on the boundary.
mpz_class open_root_bound(const IntPoly& p) {
    mpz_class maxabs = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpz_class a = abs(p.coeff(i));
        if (a > maxabs) maxabs = a;
    }
    mpz_class lead = abs(p.leading());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), maxabs.get_mpz_t(), lead.get_mpz_t());
    return q + 2;
}

struct Isolator {
    const IntPoly& f;
    const SturmChain sturm;
    std::vector<RealRoot> out;

    explicit Isolator(const IntPoly& poly) : f(poly), sturm(poly) {}

    void emit_point_root(const mpq_class& x, const mpq_class& radius) {
        RealRoot r;
        if (x.get_den() == 1) {
            r.is_integer = true;
            r.value = x.get_num();
        } else {
            r.lo = x - radius;
            r.hi = x + radius;
        }
        out.push_back(std::move(r));
    }

    void subdivide(const mpq_class& lo, const mpq_class& hi, int vlo, int vhi) {
        const int cnt = vlo - vhi;
        if (cnt <= 0) return;
        if (cnt == 1) {
            RealRoot r;
            r.lo = lo;
            r.hi = hi;
            out.push_back(std::move(r));
            return;
        }
        const mpq_class mid = (lo + hi) / 2;
        if (f.sign_at(mid) == 0) {
            mpq_class w = (hi - lo) / 4;
            while (f.sign_at(mid - w) == 0 || f.sign_at(mid + w) == 0 ||
                   sturm.root_count(mid - w, mid + w) != 1) {
                w /= 2;
            }
            const int va = sturm.variations(mid - w);
            const int vb = sturm.variations(mid + w);
            subdivide(lo, mid - w, vlo, va);
            emit_point_root(mid, w / 2);
            subdivide(mid + w, hi, vb, vhi);
            return;
        }
        const int vm = sturm.variations(mid);
        subdivide(lo, mid, vlo, vm);
        subdivide(mid, hi, vm, vhi);
    }
};

void refine_to_width(const IntPoly& f, RealRoot& r, const mpq_class& width) {
    while (!r.is_integer && mpq_class(r.hi - r.lo) > width) refine_root(f, r);
}

// At most one integer can sit in an interval of width < 1; try to snap to it.
void snap_integer(const IntPoly& f, RealRoot& r) {
    if (r.is_integer) return;
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), r.lo.get_num().get_mpz_t(), r.lo.get_den().get_mpz_t());
    if (mpq_class(k) <= r.lo || mpq_class(k) >= r.hi) return;
    const mpz_class& trailing = f.coeff(0);
    if (trailing != 0) {
        if (k == 0) return; // f(0) = trailing != 0
        if (!mpz_divisible_p(trailing.get_mpz_t(), k.get_mpz_t())) return;
    }
    if (f.eval(k) == 0) {
        r.is_integer = true;
        r.value = k;
    }
}

} // namespace

void refine_root(const IntPoly& f, RealRoot& r) {
    if (r.is_integer) return;
    const mpq_class mid = (r.lo + r.hi) / 2;
    const int sm = f.sign_at(mid);
    if (sm == 0) {
        if (mid.get_den() == 1) {
            r.is_integer = true;
            r.value = mid.get_num();
            return;
        }
        const mpq_class w = (r.hi - r.lo) / 8;
        r.lo = mid - w;
        r.hi = mid + w;
        return;
    }
    if (f.sign_at(r.lo) == sm) {
        r.lo = mid;
    } else {
        r.hi = mid;
    }
}

std::vector<RealRoot> isolate_real_roots(const IntPoly& squarefree) {
    if (squarefree.is_zero()) throw InvalidArgument("cannot isolate roots of the zero polynomial");
    if (squarefree.degree() == 0) return {};

    Isolator iso(squarefree);
    const mpz_class bound = open_root_bound(squarefree);
    const mpq_class lo(-bound);
    const mpq_class hi(bound);
    iso.subdivide(lo, hi, iso.sturm.variations(lo), iso.sturm.variations(hi));

    for (RealRoot& r : iso.out) {
        refine_to_width(squarefree, r, mpq_class(1, 2));
        snap_integer(squarefree, r);
        refine_to_width(squarefree, r, kTargetWidth);
    }
    return iso.out;
}

int compare_root_to_integer(const IntPoly& f, const RealRoot& r, const mpz_class& k) {
    if (r.is_integer) return cmp(r.value, k) < 0 ? -1 : (r.value == k ? 0 : 1);
    const mpq_class kq(k);
    RealRoot cur = r;
    if (cur.lo < kq && kq < cur.hi && f.eval(k) == 0) return 0;
    while (true) {
        if (cur.hi <= kq) return -1;
        if (cur.lo >= kq) return 1;
        refine_root(f, cur);
        if (cur.is_integer) return cmp(cur.value, k) < 0 ? -1 : (cur.value == k ? 0 : 1);
    }
}

int compare_real_roots(const IntPoly& fa, const RealRoot& a, const IntPoly& fb, const RealRoot& b) {
    if (a.is_integer && b.is_integer) {
        const int c = cmp(a.value, b.value);
        return c < 0 ? -1 : (c == 0 ? 0 : 1);
    }
    if (a.is_integer) return -compare_root_to_integer(fb, b, a.value);
    if (b.is_integer) return compare_root_to_integer(fa, a, b.value);

    RealRoot ra = a;
    RealRoot rb = b;
    bool gcd_checked = false;
    while (true) {
        if (ra.is_integer || rb.is_integer) {
            if (ra.is_integer && rb.is_integer) {
                const int c = cmp(ra.value, rb.value);
                return c < 0 ? -1 : (c == 0 ? 0 : 1);
            }
            if (ra.is_integer) return -compare_root_to_integer(fb, rb, ra.value);
            return compare_root_to_integer(fa, ra, rb.value);
        }
        if (ra.hi <= rb.lo) return -1;
        if (rb.hi <= ra.lo) return 1;
        if (!gcd_checked && ra.hi - ra.lo < kGcdFallbackWidth && rb.hi - rb.lo < kGcdFallbackWidth) {
            gcd_checked = true;
            const IntPoly g = poly_gcd(fa, fb);
            if (g.degree() >= 1) {
                const mpq_class olo = std::max(ra.lo, rb.lo);
                const mpq_class ohi = std::min(ra.hi, rb.hi);
                if (olo < ohi && SturmChain(g).root_count(olo, ohi) >= 1) return 0;
            }
        }
        refine_root(fa, ra);
        refine_root(fb, rb);
    }
}

} // namespace dlm
