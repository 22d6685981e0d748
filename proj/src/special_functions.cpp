#include "wclab/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

// B_{2k} for k = 1..15; enough for |u| up to ~1.5 at double precision.
constexpr double kBernoulli2k[] = {
    1.0 / 6.0,          -1.0 / 30.0,         1.0 / 42.0,
    -1.0 / 30.0,        5.0 / 66.0,          -691.0 / 2730.0,
    7.0 / 6.0,          -3617.0 / 510.0,     43867.0 / 798.0,
    -174611.0 / 330.0,  854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0,    -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};

// Li2 via the Bernoulli series in u = -log(1-z); converges fast for
// |z| <= 1 with Re z <= 1/2 (then |u| <= ~1.22 < 2 pi).
cplx dilog_core(cplx z) {
    const cplx u = -std::log(1.0 - z);
    const cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;
    cplx upow = u;           // u^{2k+1} after the update below
    double fact = 1.0;       // (2k+1)!
    for (int k = 1; k <= 15; ++k) {
        upow *= u2;
        fact *= (2.0 * k) * (2.0 * k + 1.0);
        const cplx term = kBernoulli2k[k - 1] / fact * upow;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() > 1.0; }

}  // namespace

cplx dilog(cplx z) {
    if (z == cplx(0.0, 0.0)) return 0.0;
    if (z == cplx(1.0, 0.0)) return kPi2Over6;
    if (on_cut(z)) throw std::domain_error("dilog: argument on the branch cut [1, inf)");

    if (std::abs(z) > 1.0) {
        // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2.
        const cplx lg = std::log(-z);
        return -dilog(1.0 / z) - kPi2Over6 - 0.5 * lg * lg;
    }
    if (z.real() > 0.5) {
        // Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
        return kPi2Over6 - std::log(z) * std::log(1.0 - z) - dilog_core(1.0 - z);
    }
    return dilog_core(z);
}

double lobachevsky(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("lobachevsky: non-finite argument");
    // Reduce by pi-periodicity to [-pi/2, pi/2], then use oddness.
    double x = std::remainder(theta, kPi);
    double sgn = 1.0;
    if (x < 0) {
        x = -x;
        sgn = -1.0;
    }
    if (x == 0.0 || x == kPi / 2.0) return 0.0;

    // Lambda(x) = Im Li2(e^{2ix}) / 2 with the reflection spelled out so
    // that 1 - e^{2ix} = 2 sin(x) e^{i(x - pi/2)} is formed exactly:
    //   Li2(e^{2ix}) = pi^2/6 - 2ix log(w) - Li2(w),  w = 1 - e^{2ix}.
    const cplx w = std::polar(2.0 * std::sin(x), x - kPi / 2.0);
    const cplx li2w = dilog(w);
    const double im = -2.0 * x * std::log(std::abs(w)) - li2w.imag();
    return sgn * 0.5 * im;
}

double bloch_wigner(cplx z) {
    if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
        throw std::domain_error("bloch_wigner: argument must avoid {0, 1}");
    if (z.imag() == 0.0) return 0.0;  // D vanishes on the real axis
    const cplx li2 = dilog(z);
    return li2.imag() + std::log(std::abs(z)) * std::arg(1.0 - z);
}

namespace {

// Integrand of phi_r on the real axis, written so the exponentials never
// overflow: sinh factored into e^{|pi x|} times a bounded remainder.
cplx tail_integrand(double x, cplx two_z_minus_pi, double r) {
    const double ax = std::abs(x);
    const cplx expo = two_z_minus_pi * x - (kPi + 2.0 * kPi / r) * ax;
    const double d1 = -std::expm1(-2.0 * kPi * ax);        // 1 - e^{-2 pi |x|}
    const double d2 = -std::expm1(-4.0 * kPi * ax / r);    // 1 - e^{-4 pi |x|/r}
    return std::exp(expo) / (x * d1 * d2);
}

// Integrand off the real axis (semicircle), direct form.
cplx circle_integrand(cplx x, cplx two_z_minus_pi, double r) {
    return std::exp(two_z_minus_pi * x) /
           (4.0 * x * std::sinh(kPi * x) * std::sinh(2.0 * kPi * x / r));
}

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

struct ContourEstimate {
    cplx value;
};

// One full contour pass with the given panel multiplier.
cplx contour_pass(cplx z, double r, const QuadratureConfig& cfg, int multiplier) {
    const cplx two_z_minus_pi = 2.0 * z - kPi;
    const double rho = cfg.semicircle_radius;
    const double log_cut = -std::log(cfg.tail_cutoff);

    const double decay_pos = 2.0 * kPi + 2.0 * kPi / r - 2.0 * z.real();
    const double decay_neg = 2.0 * z.real() + 2.0 * kPi / r;
    const double L_pos = rho + (log_cut + 5.0) / decay_pos;
    const double L_neg = rho + (log_cut + 5.0) / decay_neg;

    const int order = 16;
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);

    cplx total = 0.0;

    auto add_real_segment = [&](double a, double b) {
        const double len = b - a;
        const int panels = std::max(cfg.panel_count, static_cast<int>(std::ceil(len / 2.0))) * multiplier;
        const double h = len / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = a + (p + 0.5) * h;
            cplx acc = 0.0;
            for (int q = 0; q < order; ++q)
                acc += gw[q] * tail_integrand(mid + 0.5 * h * gx[q], two_z_minus_pi, r);
            total += 0.5 * h * acc;
        }
    };

    add_real_segment(-L_neg, -rho);
    add_real_segment(rho, L_pos);

    // Upper semicircle from -rho to +rho: x = rho e^{i phi}, phi: pi -> 0.
    {
        const int panels = std::max(cfg.panel_count, 4) * multiplier;
        const double h = kPi / panels;
        cplx acc = 0.0;
        for (int p = 0; p < panels; ++p) {
            const double mid = (p + 0.5) * h;
            for (int q = 0; q < order; ++q) {
                const double phi = mid + 0.5 * h * gx[q];
                const cplx x = std::polar(rho, phi);
                acc += 0.5 * h * gw[q] * circle_integrand(x, two_z_minus_pi, r) * cplx(0.0, 1.0) * x;
            }
        }
        total -= acc;  // phi runs from pi down to 0
    }

    return cplx(0.0, 4.0 * kPi / r) * total;
}

}  // namespace

cplx quantum_dilog(cplx z, double level, const QuadratureConfig& cfg) {
    if (!(level >= 3.0)) throw std::invalid_argument("quantum_dilog: level must be >= 3");
    if (!(cfg.semicircle_radius > 0.0 && cfg.semicircle_radius < 1.0))
        throw std::invalid_argument("quantum_dilog: semicircle radius must lie in (0,1)");
    const double margin = kPi / level;
    if (!(z.real() > -margin && z.real() < kPi + margin))
        throw std::domain_error("quantum_dilog: Re z outside (-pi/r, pi + pi/r)");

    cplx prev = contour_pass(z, level, cfg, 1);
    for (int m = 2; m <= 32; m *= 2) {
        const cplx cur = contour_pass(z, level, cfg, m);
        if (std::abs(cur - prev) < cfg.target_abs_error) return cur;
        prev = cur;
    }
    throw std::runtime_error("quantum_dilog: quadrature failed to converge to target_abs_error");
}

cplx quantum_dilog(cplx z, const RootData& root, const QuadratureConfig& cfg) {
    return quantum_dilog(z, static_cast<double>(root.r), cfg);
}

}  // namespace wclab
