#include "wclab/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wclab {

LuFactors lu_decompose(CMatrix a) {
    const int n = a.size();
    LuFactors f;
    f.pivot.resize(n);
    f.min_pivot = 0.0;

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(a(i, k));
            if (m > best) {
                best = m;
                p = i;
            }
        }
        f.pivot[k] = p;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            f.permutation_sign = -f.permutation_sign;
        }
        if (best == 0.0) {
            f.singular = true;
            f.min_pivot = 0.0;
            f.lu = std::move(a);
            return f;
        }
        f.min_pivot = (k == 0) ? best : std::min(f.min_pivot, best);
        const cplx inv = 1.0 / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx m = a(i, k) * inv;
            a(i, k) = m;
            for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    f.lu = std::move(a);
    return f;
}

cplx LuFactors::determinant() const {
    if (singular) return 0.0;
    cplx det = static_cast<double>(permutation_sign);
    for (int k = 0; k < lu.size(); ++k) det *= lu(k, k);
    return det;
}

std::vector<cplx> LuFactors::solve(const std::vector<cplx>& rhs) const {
    if (singular) throw std::runtime_error("LuFactors::solve: singular matrix");
    const int n = lu.size();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("LuFactors::solve: size mismatch");
    std::vector<cplx> x = rhs;
    for (int k = 0; k < n; ++k) {
        if (pivot[k] != k) std::swap(x[k], x[pivot[k]]);
        for (int i = k + 1; i < n; ++i) x[i] -= lu(i, k) * x[k];
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
        x[i] /= lu(i, i);
    }
    return x;
}

cplx determinant(const CMatrix& a) { return lu_decompose(a).determinant(); }

LogLinearFit fit_loglinear(const std::vector<std::pair<double, double>>& xy) {
    std::vector<double> seen;
    for (const auto& [x, y] : xy) {
        (void)y;
        if (!(x > 0)) throw std::invalid_argument("fit_loglinear: abscissae must be positive");
        bool fresh = true;
        for (double s : seen) fresh = fresh && (s != x);
        if (fresh) seen.push_back(x);
    }
    if (seen.size() < 4)
        throw std::invalid_argument("fit_loglinear: need at least 4 distinct abscissae");

    // 3x3 normal equations in long double.
    long double ata[3][3] = {};
    long double atb[3] = {};
    for (const auto& [x, y] : xy) {
        const long double row[3] = {static_cast<long double>(x), std::log(static_cast<long double>(x)), 1.0L};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) ata[i][j] += row[i] * row[j];
            atb[i] += row[i] * static_cast<long double>(y);
        }
    }
    // Gaussian elimination with partial pivoting.
    int idx[3] = {0, 1, 2};
    for (int k = 0; k < 3; ++k) {
        int p = k;
        for (int i = k + 1; i < 3; ++i)
            if (std::fabs(static_cast<double>(ata[idx[i]][k])) >
                std::fabs(static_cast<double>(ata[idx[p]][k])))
                p = i;
        std::swap(idx[k], idx[p]);
        const long double piv = ata[idx[k]][k];
        if (std::fabs(static_cast<double>(piv)) < 1e-30)
            throw std::invalid_argument("fit_loglinear: singular design matrix");
        for (int i = k + 1; i < 3; ++i) {
            const long double m = ata[idx[i]][k] / piv;
            for (int j = k; j < 3; ++j) ata[idx[i]][j] -= m * ata[idx[k]][j];
            atb[idx[i]] -= m * atb[idx[k]];
        }
    }
    long double c[3];
    for (int i = 2; i >= 0; --i) {
        long double s = atb[idx[i]];
        for (int j = i + 1; j < 3; ++j) s -= ata[idx[i]][j] * c[j];
        c[i] = s / ata[idx[i]][i];
    }

    LogLinearFit fit;
    fit.alpha = static_cast<double>(c[0]);
    fit.beta = static_cast<double>(c[1]);
    fit.gamma = static_cast<double>(c[2]);
    long double ss = 0.0L;
    for (const auto& [x, y] : xy) {
        const long double e = static_cast<long double>(y) -
                              (c[0] * x + c[1] * std::log(static_cast<long double>(x)) + c[2]);
        ss += e * e;
    }
    fit.residual = static_cast<double>(std::sqrt(static_cast<double>(ss / xy.size())));
    return fit;
}

}  // namespace wclab
