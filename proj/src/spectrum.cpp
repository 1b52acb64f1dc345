#include "dlmkit/spectrum.hpp"

#include <algorithm>

namespace dlm {

ExactSpectrum ExactSpectrum::from_char_poly(IntPoly p) {
    if (p.is_zero() || !p.is_monic()) {
        throw InvalidArgument("characteristic polynomial must be monic");
    }
    ExactSpectrum s;
    s.order_ = p.degree();
    s.poly_ = std::move(p);
    s.factors_ = squarefree_decompose(s.poly_);

    int total = 0;
    for (std::size_t fi = 0; fi < s.factors_.size(); ++fi) {
        const auto& [f, exp] = s.factors_[fi];
        std::vector<RealRoot> roots = isolate_real_roots(f);
        if (static_cast<int>(roots.size()) != f.degree()) {
            throw Error("characteristic polynomial has non-real roots; matrix not symmetric?");
        }
        for (RealRoot& r : roots) {
            Entry e;
            e.root = std::move(r);
            e.multiplicity = exp;
            e.factor_index = static_cast<int>(fi);
            s.entries_.push_back(std::move(e));
        }
        total += f.degree() * exp;
    }
    if (total != s.order_) {
        throw Error("squarefree decomposition does not account for the full degree");
    }

    // Separate roots owned by different factors (coprime, so all roots are
    // distinct) until ordering is a plain endpoint comparison.
    auto exclude_value = [](const IntPoly& f, RealRoot& r, const mpz_class& k) {
        const mpq_class kq(k);
        while (!r.is_integer && r.lo < kq && kq < r.hi) refine_root(f, r);
    };
    for (std::size_t i = 0; i < s.entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < s.entries_.size(); ++j) {
            Entry& a = s.entries_[i];
            Entry& b = s.entries_[j];
            if (a.factor_index == b.factor_index) continue; // already disjoint
            const IntPoly& fa = s.factors_[static_cast<std::size_t>(a.factor_index)].first;
            const IntPoly& fb = s.factors_[static_cast<std::size_t>(b.factor_index)].first;
            while (true) {
                if (a.root.is_integer && b.root.is_integer) break;
                if (a.root.is_integer) {
                    exclude_value(fb, b.root, a.root.value);
                    break;
                }
                if (b.root.is_integer) {
                    exclude_value(fa, a.root, b.root.value);
                    break;
                }
                if (a.root.hi <= b.root.lo || b.root.hi <= a.root.lo) break;
                refine_root(fa, a.root);
                refine_root(fb, b.root);
            }
        }
    }

    auto less_desc = [&](const Entry& a, const Entry& b) {
        if (a.root.is_integer && b.root.is_integer) return a.root.value > b.root.value;
        if (a.root.is_integer) {
            // Disjoint by construction: the integer is outside b's interval.
            return mpq_class(a.root.value) >= b.root.hi;
        }
        if (b.root.is_integer) return a.root.lo >= mpq_class(b.root.value);
        // Disjoint open intervals never share a lower endpoint.
        return a.root.lo > b.root.lo;
    };
    std::sort(s.entries_.begin(), s.entries_.end(), less_desc);
    return s;
}

ExactSpectrum ExactSpectrum::of_matrix(const IntSymMatrix& m) {
    return from_char_poly(char_poly(m));
}

int ExactSpectrum::multiplicity_of_integer(const mpz_class& v) const {
    for (const auto& e : entries_) {
        if (e.root.is_integer && e.root.value == v) return e.multiplicity;
    }
    return 0;
}

const IntPoly& ExactSpectrum::owner(const Entry& e) const {
    return factors_[static_cast<std::size_t>(e.factor_index)].first;
}

std::vector<double> ExactSpectrum::approx_descending() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (const auto& e : entries_) {
        const double v = e.root.approx();
        for (int i = 0; i < e.multiplicity; ++i) out.push_back(v);
    }
    return out;
}

std::string ExactSpectrum::key() const {
    return std::to_string(order_) + ";" + poly_.to_string();
}

int ExactSpectrum::compare_entries(const ExactSpectrum& a, const Entry& ea, const ExactSpectrum& b,
                                   const Entry& eb) {
    static const IntPoly kNone;
    const IntPoly& fa = ea.root.is_integer ? kNone : a.owner(ea);
    const IntPoly& fb = eb.root.is_integer ? kNone : b.owner(eb);
    return compare_real_roots(fa, ea.root, fb, eb.root);
}

int ExactSpectrum::compare_entry_to_integer(const ExactSpectrum& a, const Entry& e,
                                            const mpz_class& k) {
    static const IntPoly kNone;
    const IntPoly& f = e.root.is_integer ? kNone : a.owner(e);
    return compare_root_to_integer(f, e.root, k);
}

} // namespace dlm
