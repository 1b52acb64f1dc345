#include "dlmkit/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dlm {

JacobiResult jacobi_eigen(const IntSymMatrix& m) {
    const int n = m.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j).get_d();
    }
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<std::size_t>(i) * n + j];
    };

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(a, i, i)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) scale = std::max(scale, std::abs(at(a, i, j)));
    }
    const double stop = 1e-14 * (scale > 0 ? scale : 1.0);

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(at(a, i, j)));
        }
        if (off <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = at(a, p, p);
                const double aqq = at(a, q, q);
                at(a, p, p) = app - t * apq;
                at(a, q, q) = aqq + t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = at(a, r, p);
                        const double arq = at(a, r, q);
                        at(a, r, p) = at(a, p, r) = arp - s * (arq + tau * arp);
                        at(a, r, q) = at(a, q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = at(v, r, p);
                    const double vrq = at(v, r, q);
                    at(v, r, p) = vrp - s * (vrq + tau * vrp);
                    at(v, r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (sweep == kMaxSweeps) throw ConvergenceFailure("Jacobi sweep budget exhausted");

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int x, int y) { return at(a, x, x) > at(a, y, y); });

    JacobiResult res;
    res.values.reserve(static_cast<std::size_t>(n));
    res.vectors.reserve(static_cast<std::size_t>(n));
    for (int k : idx) {
        res.values.push_back(at(a, k, k));
        std::vector<double> col(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = at(v, r, k);
        res.vectors.push_back(std::move(col));
    }
    return res;
}

std::vector<double> numeric_eigenvalues(const IntSymMatrix& m) {
    return jacobi_eigen(m).values;
}

} // namespace dlm
