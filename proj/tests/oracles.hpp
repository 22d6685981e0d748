#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: direct series/integral evaluations in extended precision.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "wclab/root_data.hpp"

namespace oracle {

inline constexpr long double kPiL = std::numbers::pi_v<long double>;

// Li2 by direct power series (|z| <= 1).  At |z| = 1 the partial-sum tail
// is bounded by the first omitted term of the real/imaginary alternating
// regroupings, so 2e7 terms give ~1e-15.
inline std::complex<long double> dilog_series(std::complex<long double> z, long n_terms = 20000000) {
    std::complex<long double> sum = 0;
    std::complex<long double> p = 1;
    for (long n = 1; n <= n_terms; ++n) {
        p *= z;
        const long double inv = 1.0L / (static_cast<long double>(n) * n);
        sum += p * inv;
        if (std::abs(p) * inv < 1e-22L) break;  // |z| < 1: geometric tail
    }
    return sum;
}

// Lobachevsky function by its defining integral -int_0^theta log|2 sin t| dt
// for theta in [0, pi]: composite Gauss-Legendre away from the endpoints,
// analytic log part plus a short Taylor series of log(sin t / t) near them.
namespace detail {

inline void gauss_legendre(int n, std::vector<long double>& x, std::vector<long double>& w) {
    x.assign(n, 0);
    w.assign(n, 0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double t = std::cos(kPiL * (i + 0.75L) / (n + 0.5L));
        long double pp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = 0;
            for (int j = 0; j < n; ++j) {
                const long double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
            }
            pp = n * (t * p0 - p1) / (t * t - 1);
            const long double dt = p0 / pp;
            t -= dt;
            if (std::fabs(static_cast<double>(dt)) < 1e-19) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0L / ((1 - t * t) * pp * pp);
    }
}

// int_0^eps log(2 sin t) dt = eps (log(2 eps) - 1) + int_0^eps log(sin t/t) dt.
inline long double edge_integral(long double eps) {
    const long double analytic = eps * (std::log(2.0L * eps) - 1.0L);
    // log(sin t / t) = -t^2/6 - t^4/180 - t^6/2835 - t^8/37800 - t^10/467775 - ...
    const long double e2 = eps * eps;
    long double series = -(e2 * eps) / 18.0L;
    series -= (e2 * e2 * eps) / 900.0L;
    series -= (e2 * e2 * e2 * eps) / (7.0L * 2835.0L);
    series -= (e2 * e2 * e2 * e2 * eps) / (9.0L * 37800.0L);
    series -= (e2 * e2 * e2 * e2 * e2 * eps) / (11.0L * 467775.0L);
    series -= (e2 * e2 * e2 * e2 * e2 * e2 * eps) * (691.0L / (13.0L * 3831077250.0L));
    return analytic + series;
}

}  // namespace detail

inline long double lobachevsky_integral(long double theta) {
    if (theta == 0.0L) return 0.0L;
    const long double edge = 0.125L;
    const long double eps = std::min(edge, theta / 2);
    long double integral = detail::edge_integral(eps);  // int_0^eps
    long double hi = theta;
    if (theta > kPiL - edge) {
        // Mirror the endpoint treatment at pi: sin t = sin(pi - t), so
        // int_{pi-edge}^{theta} = edge_integral(edge) - edge_integral(pi - theta).
        hi = kPiL - edge;
        integral += detail::edge_integral(edge) -
                    (kPiL - theta < 1e-30L ? 0.0L : detail::edge_integral(kPiL - theta));
    }
    // Composite Gauss-Legendre on [eps, hi].
    std::vector<long double> x, w;
    detail::gauss_legendre(48, x, w);
    const int panels = 64;
    const long double h = (hi - eps) / panels;
    long double acc = 0;
    for (int p = 0; p < panels; ++p) {
        const long double mid = eps + (p + 0.5L) * h;
        for (size_t q = 0; q < x.size(); ++q) {
            const long double t = mid + 0.5L * h * x[q];
            acc += 0.5L * h * w[q] * std::log(std::fabs(2.0L * std::sin(t)));
        }
    }
    return -(integral + acc);
}

// C~(n, t^{orientation}; M2) by the literal triple loop in long double.
inline std::complex<long double> clasp_coeff_direct(int n, int M2, const wclab::RootData& root,
                                                    int orientation) {
    using C = std::complex<long double>;
    const long double angle = 2.0L * kPiL / (static_cast<long double>(root.N) + 0.5L) * orientation;
    auto tpow = [&](long double e) { return std::polar<long double>(1.0L, angle * e); };
    C sum = 0;
    for (int l = 0; l <= M2 - 1 - n; ++l) {
        C prod = tpow(-static_cast<long double>(M2) * (l + n));
        for (int j = 1; j <= n; ++j) {
            prod *= (C(1) - tpow(M2 - l - j)) * (C(1) - tpow(l + j)) / (C(1) - tpow(j));
        }
        sum += prod;
    }
    return tpow(static_cast<long double>(M2) * (M2 - 1) / 2) * sum;
}

// Unnormalized J_{M1,M2}(WL) by direct summation.
inline std::complex<long double> jones_whitehead_direct(int M1, int M2, const wclab::RootData& root) {
    using C = std::complex<long double>;
    const long double angle = 2.0L * kPiL / (static_cast<long double>(root.N) + 0.5L);
    auto tpow = [&](long double e) { return std::polar<long double>(1.0L, angle * e); };
    C sum = 0;
    for (int n = 0; n < M2; ++n) {
        const long double e = static_cast<long double>(M1) * (2 * n + 1) / 2.0L;
        sum += (tpow(e) - tpow(-e)) * clasp_coeff_direct(n, M2, root, +1);
    }
    return tpow((static_cast<long double>(M2) * M2 - 1) / 2.0L) * sum /
           (tpow(0.5L) - tpow(-0.5L));
}

// Unnormalized J_{M1,M2}(W_{a,1,c,d}) by direct summation.
inline std::complex<long double> jones_chain_direct(int a, int c, int d, int M1, int M2,
                                                    const wclab::RootData& root) {
    using C = std::complex<long double>;
    const long double angle = 2.0L * kPiL / (static_cast<long double>(root.N) + 0.5L);
    auto tpow = [&](long double e) { return std::polar<long double>(1.0L, angle * e); };
    C sum = 0;
    for (int n = 0; n < M2; ++n) {
        const long double e = static_cast<long double>(M1) * (2 * n + 1) / 2.0L;
        C term = (tpow(e) - tpow(-e)) * tpow(static_cast<long double>(a) * n * (n + 1));
        for (int k = 0; k < c; ++k) term *= clasp_coeff_direct(n, M2, root, +1);
        for (int k = 0; k < d; ++k) term *= clasp_coeff_direct(n, M2, root, -1);
        sum += term;
    }
    return sum / (tpow(0.5L) - tpow(-0.5L));
}

}  // namespace oracle
