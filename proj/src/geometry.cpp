#include "wclab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI(0.0, 2.0 * kPi);

cplx exp2pii(cplx w) { return std::exp(kTwoPiI * w); }

// Shape-parameter companions around the other edge pairs.
cplx prime(cplx a) { return 1.0 / (1.0 - a); }
cplx dprime(cplx a) { return 1.0 - 1.0 / a; }

void check_shape(cplx a) {
    if (a == cplx(0.0, 0.0) || a == cplx(1.0, 0.0))
        throw std::runtime_error("gluing_residuals: shape parameter at a pole (0 or 1)");
}

// (1 - B2 U)(1 - 1/U) / ((1 - B2/W)(1 - W)); equals B2 at critical points.
cplx clasp_edge_product(cplx B2, cplx U, cplx W) {
    return (1.0 - B2 * U) * (1.0 - 1.0 / U) / ((1.0 - B2 / W) * (1.0 - W));
}

// Mirror version; equals 1/B2 at critical points.
cplx mirror_edge_product(cplx B2, cplx U, cplx W) {
    return (1.0 - 1.0 / (B2 * U)) * (1.0 - U) / ((1.0 - W / B2) * (1.0 - 1.0 / W));
}

cplx int_power(cplx base, int e) {
    cplx out(1.0, 0.0);
    const cplx b = e < 0 ? 1.0 / base : base;
    for (int k = 0; k < std::abs(e); ++k) out *= b;
    return out;
}

}  // namespace

ShapeAssignment shapes_from_coordinates(const PotentialParams& params, const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("shapes_from_coordinates: coordinate count must be c + d + 1");
    ShapeAssignment s;
    s.clasps = params.clasps;
    s.mirror_clasps = params.mirror_clasps;
    s.full_twists = params.full_twists;
    s.sign = params.sign;
    s.Z1 = exp2pii(z[0]);
    s.B1 = exp2pii(params.s1);
    s.B2 = exp2pii(params.s2);
    const int blocks = params.clasps + params.mirror_clasps;
    s.W.resize(blocks);
    s.U.resize(blocks);
    for (int k = 0; k < blocks; ++k) {
        s.W[k] = exp2pii(z[1 + k]);
        s.U[k] = 1.0 / (s.Z1 * s.W[k]);
    }
    return s;
}

double GluingReport::max_edge_residual() const {
    double m = 0;
    for (const cplx& e : edge_residuals) m = std::max(m, std::abs(e));
    return m;
}

GluingReport gluing_residuals(const ShapeAssignment& shapes) {
    const cplx Z = shapes.Z1;
    const cplx B1 = shapes.B1;
    const cplx B2 = shapes.B2;
    check_shape(Z);
    for (const cplx& w : shapes.W) check_shape(w);
    for (const cplx& u : shapes.U) check_shape(u);

    GluingReport report;

    if (shapes.clasps == 1 && shapes.mirror_clasps == 0) {
        // Whitehead link: the five tetrahedra of the octahedron carry the
        // shapes {U, Z, W, B2^{-1} W, B2 U}; the six vertex products of the
        // belt and clasp boundary tori are evaluated literally.
        const cplx W = shapes.W[0];
        const cplx U = shapes.U[0];
        const cplx BW = W / B2;  // B2^{-1} W
        const cplx BU = B2 * U;
        check_shape(BW);
        check_shape(BU);

        const cplx v1 = (prime(W) * dprime(Z) * prime(BW) * prime(BU) * dprime(Z) * prime(U)) *
                        (dprime(BW) * prime(Z) * dprime(U) * dprime(W) * prime(Z) * dprime(BU));
        const cplx v2 = (W * prime(U) * dprime(W)) * (prime(BU) * dprime(BW) * BU);
        const cplx v3 = v1;
        const cplx v4 = (U * prime(W) * dprime(U)) * (prime(BW) * dprime(BU) * BW);
        const cplx v5 = W * BU * dprime(BW) * prime(BU) * dprime(W) * prime(U);
        const cplx v6 = BW * dprime(BU) * prime(W) * dprime(U) * prime(BW) * U;

        report.edge_residuals = {v1 - 1.0, v2 - 1.0, v3 - 1.0, v4 - 1.0, v5 - 1.0, v6 - 1.0};

        report.meridian_m1 = B2 * (1.0 - Z) / ((1.0 - BU) * (1.0 - 1.0 / U));
        report.longitude_l2 = B2 * clasp_edge_product(B2, U, W);
        return report;
    }

    // General chain: per-block edge equations plus the twisted belt product
    // Z1^{2a} * prod(...) = B1^{-1} (B1 for the - potential).
    cplx belt = int_power(Z, 2 * shapes.full_twists);
    for (int i = 0; i < shapes.clasps; ++i) {
        const cplx U = shapes.U[i];
        const cplx W = shapes.W[i];
        report.edge_residuals.push_back(clasp_edge_product(B2, U, W) / B2 - 1.0);
        belt *= (1.0 - B2 * U) * (1.0 - 1.0 / U) / (B2 * (1.0 - Z));
    }
    for (int i = 0; i < shapes.mirror_clasps; ++i) {
        const cplx U = shapes.U[shapes.clasps + i];
        const cplx W = shapes.W[shapes.clasps + i];
        report.edge_residuals.push_back(mirror_edge_product(B2, U, W) * B2 - 1.0);
        belt *= (1.0 - 1.0 / (B2 * U)) * (1.0 - U) * B2 / (1.0 - 1.0 / Z);
    }
    report.edge_residuals.push_back(shapes.sign == Sign::Plus ? belt * B1 - 1.0
                                                              : belt / B1 - 1.0);
    report.meridian_m1 = 1.0 / belt;
    if (shapes.clasps > 0)
        report.longitude_l2 = B2 * clasp_edge_product(B2, shapes.U[0], shapes.W[0]);
    else
        report.longitude_l2 = mirror_edge_product(B2, shapes.U[0], shapes.W[0]) / B2;
    return report;
}

double bloch_wigner_volume(const PotentialParams& params, const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("bloch_wigner_volume: coordinate count must be c + d + 1");
    const cplx z1 = z[0];
    const cplx s2 = params.s2;
    double v = 0;
    for (int i = 0; i < params.clasps; ++i) {
        const cplx w = z[1 + i];
        v += bloch_wigner(exp2pii(s2 - 1.0 - z1 - w)) - bloch_wigner(exp2pii(s2 - 1.0 - w)) +
             bloch_wigner(exp2pii(w)) - bloch_wigner(exp2pii(z1 + w)) + bloch_wigner(exp2pii(z1));
    }
    for (int i = 0; i < params.mirror_clasps; ++i) {
        const cplx w = z[1 + params.clasps + i];
        v += -bloch_wigner(exp2pii(-(s2 - 1.0) + z1 + w)) + bloch_wigner(exp2pii(-(s2 - 1.0) + w)) -
             bloch_wigner(exp2pii(-w)) + bloch_wigner(exp2pii(-z1 - w)) - bloch_wigner(exp2pii(-z1));
    }
    return v;
}

double differential_residual(const PotentialParams& params, const Zvec& z) {
    const cplx value = chain_potential(params, z);
    const Zvec grad = chain_gradient(params, z);
    const double v = bloch_wigner_volume(params, z);
    double ysum = 0;
    for (size_t k = 0; k < z.size(); ++k) ysum += z[k].imag() * (-grad[k].imag());
    return std::abs(value.real() - v / (2.0 * kPi) - ysum);
}

double clasp_bound_f(double x, double y, double s) {
    const double slack = 1e-12;
    if (x < -slack || y < -slack || s < -slack || s > 1.0 + slack || x + y > s + slack)
        throw std::domain_error("clasp_bound_f: (x, y, s) outside Delta_s");
    return (lobachevsky(kPi * s - kPi * x - kPi * y) - lobachevsky(kPi * s - kPi * y) +
            lobachevsky(kPi * y) - lobachevsky(kPi * x + kPi * y) + lobachevsky(kPi * x)) /
           kPi;
}

namespace {

// f extended off Delta_s (Lambda is entire-by-periodicity), used only by
// the Newton polish around the interior stationary point.
double f_unchecked(double x, double y, double s) {
    return (lobachevsky(kPi * s - kPi * x - kPi * y) - lobachevsky(kPi * s - kPi * y) +
            lobachevsky(kPi * y) - lobachevsky(kPi * x + kPi * y) + lobachevsky(kPi * x)) /
           kPi;
}

double log2sin(double t) { return std::log(std::fabs(2.0 * std::sin(t))); }
double cot(double t) { return 1.0 / std::tan(t); }

void f_gradient(double x, double y, double s, double g[3]) {
    g[0] = log2sin(kPi * (s - x - y)) + log2sin(kPi * (x + y)) - log2sin(kPi * x);
    g[1] = log2sin(kPi * (s - x - y)) - log2sin(kPi * (s - y)) - log2sin(kPi * y) +
           log2sin(kPi * (x + y));
    g[2] = -log2sin(kPi * (s - x - y)) + log2sin(kPi * (s - y));
}

void f_hessian(double x, double y, double s, double h[3][3]) {
    const double ca = cot(kPi * (s - x - y));
    const double cb = cot(kPi * (s - y));
    const double cc = cot(kPi * y);
    const double cd = cot(kPi * (x + y));
    const double ce = cot(kPi * x);
    h[0][0] = kPi * (-ca + cd - ce);
    h[0][1] = h[1][0] = kPi * (-ca + cd);
    h[0][2] = h[2][0] = kPi * ca;
    h[1][1] = kPi * (-ca - cb - cc + cd);
    h[1][2] = h[2][1] = kPi * (ca + cb);
    h[2][2] = kPi * (-ca + cb);
}

}  // namespace

ClaspBoundMax maximize_clasp_bound() {
    // Coarse deterministic grid, step 1e-2.
    ClaspBoundMax best;
    best.value = -1e30;
    const int steps = 100;
    for (int is = 1; is <= steps; ++is) {
        const double s = is / 100.0;
        for (int ix = 0; ix <= is; ++ix) {
            const double x = ix / 100.0;
            for (int iy = 0; ix + iy <= is; ++iy) {
                const double y = iy / 100.0;
                const double v = f_unchecked(x, y, s);
                if (v > best.value) best = {x, y, s, v};
            }
        }
    }

    // Pattern search with shrinking steps, projected into Delta_s.
    double step = 5e-3;
    while (step > 1e-9) {
        bool improved = false;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int ds = -1; ds <= 1; ++ds) {
                    double x = best.x + dx * step;
                    double y = best.y + dy * step;
                    double s = std::min(1.0, best.s + ds * step);
                    if (x < 0 || y < 0 || s < 0 || x + y > s) continue;
                    const double v = f_unchecked(x, y, s);
                    if (v > best.value) {
                        best = {x, y, s, v};
                        improved = true;
                    }
                }
        if (!improved) step *= 0.5;
    }

    // Newton polish on the analytic gradient; the maximizer is a genuine
    // stationary point of the continued f, so the polish converges even
    // though it sits on the s = 1 face.
    double p[3] = {best.x, best.y, best.s};
    for (int iter = 0; iter < 40; ++iter) {
        double g[3], h[3][3];
        f_gradient(p[0], p[1], p[2], g);
        f_hessian(p[0], p[1], p[2], h);
        // Solve h * d = g (3x3 Gaussian elimination).
        double a[3][4] = {{h[0][0], h[0][1], h[0][2], g[0]},
                          {h[1][0], h[1][1], h[1][2], g[1]},
                          {h[2][0], h[2][1], h[2][2], g[2]}};
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
            int piv = k;
            for (int i = k + 1; i < 3; ++i)
                if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
            if (std::fabs(a[piv][k]) < 1e-14) {
                ok = false;
                break;
            }
            for (int j = 0; j < 4; ++j) std::swap(a[k][j], a[piv][j]);
            for (int i = k + 1; i < 3; ++i) {
                const double m = a[i][k] / a[k][k];
                for (int j = k; j < 4; ++j) a[i][j] -= m * a[k][j];
            }
        }
        if (!ok) break;
        double d[3];
        for (int i = 2; i >= 0; --i) {
            double sum = a[i][3];
            for (int j = i + 1; j < 3; ++j) sum -= a[i][j] * d[j];
            d[i] = sum / a[i][i];
        }
        double q[3] = {p[0] - d[0], p[1] - d[1], p[2] - d[2]};
        // Keep the polish local; otherwise trust the pattern-search point.
        if (std::fabs(q[0] - best.x) > 0.05 || std::fabs(q[1] - best.y) > 0.05 ||
            std::fabs(q[2] - best.s) > 0.05)
            break;
        const double move = std::fabs(d[0]) + std::fabs(d[1]) + std::fabs(d[2]);
        p[0] = q[0];
        p[1] = q[1];
        p[2] = q[2];
        if (move < 1e-14) break;
    }
    if (p[2] > 1.0) p[2] = 1.0;
    if (p[0] >= 0 && p[1] >= 0 && p[0] + p[1] <= p[2]) {
        const double v = f_unchecked(p[0], p[1], p[2]);
        if (v >= best.value - 1e-12) best = {p[0], p[1], p[2], v};
    }
    return best;
}

double clasp_coeff_log_growth(double x, double y, double s, int N) {
    const RootData root = RootData::from_order(N);
    const double half = root.half_level;
    const int M = std::max(1, std::min(N, static_cast<int>(std::lround(s * half))));
    const int n = static_cast<int>(std::lround(x * half));
    const int l = static_cast<int>(std::lround(y * half));
    if (n < 1 || l < 0 || n > M - 1 - l)
        throw std::domain_error("clasp_coeff_log_growth: indices leave the summation range");
    const double r = static_cast<double>(root.r);
    long double acc = 0.0L;
    for (int j = 1; j <= n; ++j) {
        const double a1 = std::fabs(2.0 * std::sin(2.0 * kPi * (M - l - j) / r));
        const double a2 = std::fabs(2.0 * std::sin(2.0 * kPi * (l + j) / r));
        const double a3 = std::fabs(2.0 * std::sin(2.0 * kPi * j / r));
        acc += std::log(a1) + std::log(a2) - std::log(a3);
    }
    return static_cast<double>(acc) / half;
}

}  // namespace wclab
