#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "wclab/potential.hpp"

using wclab::ChainSpec;
using wclab::Coloring;
using wclab::cplx;
using wclab::PotentialParams;
using wclab::RootData;
using wclab::Sign;
using wclab::Zvec;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
const double kV8 = 3.663862376708876;  // 8 Lambda(pi/4)

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Zvec random_domain_point(std::mt19937_64& rng, int dim) {
    Zvec z(dim);
    z[0] = cplx(uniform(rng, 0.35, 0.62), uniform(rng, -0.05, 0.05));
    for (int k = 1; k < dim; ++k)
        z[k] = cplx(uniform(rng, 0.12, 0.27), uniform(rng, -0.05, 0.05));
    return z;
}

Zvec symmetric_point(int dim) {
    Zvec z(dim, cplx(0.25, 0.0));
    z[0] = cplx(0.5, 0.0);
    return z;
}
}  // namespace

TEST_CASE("whitehead potential at the symmetric critical point") {
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
    const cplx value = wclab::whitehead_potential(p, 0.5, 0.25);
    const cplx expect = (kV8 + kI * kPi * kPi / 12.0) / (2.0 * kPi);
    CHECK(std::abs(value - expect) < 1e-13);
}

TEST_CASE("plus and minus potentials coincide at s1 = 1") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 20; ++k) {
        const Zvec z = random_domain_point(rng, 2);
        const PotentialParams plus = PotentialParams::whitehead(Sign::Plus, 1.0, 0.97);
        const PotentialParams minus = PotentialParams::whitehead(Sign::Minus, 1.0, 0.97);
        CHECK(std::abs(wclab::whitehead_potential(plus, z[0], z[1]) -
                       wclab::whitehead_potential(minus, z[0], z[1])) < 1e-14);
    }
}

TEST_CASE("whitehead potential matches a term-by-term recomposition") {
    // s = (0.95, 0.98), z = (0.48, 0.26), reassembled directly from dilog.
    const double s1 = 0.95, s2 = 0.98;
    const cplx z1(0.48, 0.0), z2(0.26, 0.0);
    const cplx twopii(0.0, 2.0 * kPi);
    auto e = [&](cplx w) { return std::exp(twopii * w); };
    const cplx expect = twopii * (s1 - 1.0) * (z1 - 0.5) - twopii * (s2 - 1.0) * (z1 + z2) +
                        (wclab::dilog(e(s2 - 1.0 - z1 - z2)) - wclab::dilog(e(s2 - 1.0 - z2)) +
                         wclab::dilog(e(z2)) - wclab::dilog(e(z1 + z2)) + wclab::dilog(e(z1))) /
                            twopii;
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, s1, s2);
    CHECK(std::abs(wclab::whitehead_potential(p, z1, z2) - expect) < 1e-14);
}

TEST_CASE("gradient vanishes at the critical point and matches differences") {
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
    const auto g0 = wclab::whitehead_gradient(p, 0.5, 0.25);
    CHECK(std::abs(g0[0]) < 1e-14);
    CHECK(std::abs(g0[1]) < 1e-14);

    std::mt19937_64 rng(22);
    const double h = 1e-5;
    for (int k = 0; k < 50; ++k) {
        const double s1 = uniform(rng, 0.9, 1.0);
        const double s2 = uniform(rng, 0.9, 1.0);
        const PotentialParams q = PotentialParams::whitehead(Sign::Plus, s1, s2);
        const Zvec z = random_domain_point(rng, 2);
        const auto g = wclab::whitehead_gradient(q, z[0], z[1]);
        const cplx fd1 = (wclab::whitehead_potential(q, z[0] + h, z[1]) -
                          wclab::whitehead_potential(q, z[0] - h, z[1])) /
                         (2.0 * h);
        const cplx fd2 = (wclab::whitehead_potential(q, z[0], z[1] + h) -
                          wclab::whitehead_potential(q, z[0], z[1] - h)) /
                         (2.0 * h);
        CHECK(std::abs(g[0] - fd1) <= 1e-7 * std::max(1.0, std::abs(g[0])));
        CHECK(std::abs(g[1] - fd2) <= 1e-7 * std::max(1.0, std::abs(g[1])));
    }
}

TEST_CASE("gradient of the linear part is constant") {
    // Subtracting the dilogarithm logs leaves an affine function of z.
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 0.93, 0.96);
    const cplx twopii(0.0, 2.0 * kPi);
    auto linear_grad = [&](cplx z1, cplx z2) {
        auto g = wclab::whitehead_gradient(p, z1, z2);
        auto e = [&](cplx w) { return std::exp(twopii * w); };
        const cplx lA = std::log(1.0 - e(p.s2 - 1.0 - z1 - z2));
        const cplx lF = std::log(1.0 - e(z1 + z2));
        g[0] -= lA + lF - std::log(1.0 - e(z1));
        g[1] -= lA + lF - std::log(1.0 - e(p.s2 - 1.0 - z2)) - std::log(1.0 - e(z2));
        return g;
    };
    const auto a = linear_grad(cplx(0.5, 0.01), cplx(0.22, -0.01));
    const auto b = linear_grad(cplx(0.41, -0.02), cplx(0.3, 0.02));
    CHECK(std::abs(a[0] - b[0]) < 1e-13);
    CHECK(std::abs(a[1] - b[1]) < 1e-13);
}

TEST_CASE("hessian frozen entries and determinant at the critical point") {
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
    const auto h = wclab::whitehead_hessian(p, 0.5, 0.25);
    const cplx twopii(0.0, 2.0 * kPi);
    CHECK(std::abs(h(0, 0) - twopii * (2.0 * kI - 1.0) / 2.0) < 1e-13);
    CHECK(std::abs(h(1, 1) - twopii * (2.0 * kI)) < 1e-13);
    CHECK(std::abs(h(0, 1) - twopii * kI) < 1e-13);

    const cplx det = wclab::determinant(h);
    const cplx expect = 4.0 * kPi * kPi * (1.0 + kI);
    CHECK(std::abs(det - expect) <= 1e-10 * std::abs(expect));
}

TEST_CASE("hessian symmetry and agreement with gradient differences") {
    std::mt19937_64 rng(23);
    const double h = 1e-5;
    for (int k = 0; k < 40; ++k) {
        const double s1 = uniform(rng, 0.9, 1.0);
        const double s2 = uniform(rng, 0.9, 1.0);
        const PotentialParams q = PotentialParams::whitehead(Sign::Plus, s1, s2);
        const Zvec z = random_domain_point(rng, 2);
        const auto hess = wclab::whitehead_hessian(q, z[0], z[1]);
        CHECK(std::abs(hess(0, 1) - hess(1, 0)) < 1e-12);

        const auto gp = wclab::whitehead_gradient(q, z[0] + h, z[1]);
        const auto gm = wclab::whitehead_gradient(q, z[0] - h, z[1]);
        CHECK(std::abs((gp[0] - gm[0]) / (2 * h) - hess(0, 0)) <=
              1e-5 * std::max(1.0, std::abs(hess(0, 0))));
        CHECK(std::abs((gp[1] - gm[1]) / (2 * h) - hess(1, 0)) <=
              1e-5 * std::max(1.0, std::abs(hess(1, 0))));
    }
}

TEST_CASE("chain blocks at the symmetric point") {
    // psi(1/2,1/4) = (8 L(pi/4) + i pi^2/12)/(2 pi); kappa conjugates the
    // imaginary part.
    const cplx psi = wclab::clasp_block(1.0, 0.5, 0.25);
    const cplx kappa = wclab::mirror_clasp_block(1.0, 0.5, 0.25);
    const cplx base = (kV8 + kI * kPi * kPi / 12.0) / (2.0 * kPi);
    CHECK(std::abs(psi - base) < 1e-13);
    CHECK(std::abs(kappa - std::conj(base)) < 1e-13);
}

TEST_CASE("chain critical value, gradient and hessian determinant") {
    for (const ChainSpec spec : {ChainSpec{0, 1, 0}, ChainSpec{0, 2, 0}, ChainSpec{1, 1, 1},
                                 ChainSpec{-2, 2, 1}, ChainSpec{3, 1, 2}}) {
        const int c = spec.clasps, d = spec.mirror_clasps, a = spec.full_twists;
        const PotentialParams p = PotentialParams::chain(Sign::Plus, 1.0, 1.0, spec);
        const Zvec z = symmetric_point(p.dimension());

        const cplx value = wclab::chain_potential(p, z);
        const cplx expect = (8.0 * (c + d) * (kV8 / 8.0) + (c - d) * kPi * kPi / 12.0 * kI) /
                            (2.0 * kPi);
        CHECK(std::abs(value - expect) < 1e-12);

        const Zvec g = wclab::chain_gradient(p, z);
        for (const cplx& gk : g) CHECK(std::abs(gk) < 1e-13);

        // det Hess = (2 pi i)^{c+d+1} (2i)^{c+d-1} [((c+d)i - (c-d)/2 + 2a)(2i) - (c+d) i^2]
        const cplx det = wclab::determinant(wclab::chain_hessian(p, z));
        const cplx twopii(0.0, 2.0 * kPi);
        cplx closed = (static_cast<double>(c + d) * kI - (c - d) / 2.0 + 2.0 * a) * (2.0 * kI) -
                      static_cast<double>(c + d) * kI * kI;
        for (int k = 0; k < c + d + 1; ++k) closed *= twopii;
        for (int k = 0; k < c + d - 1; ++k) closed *= 2.0 * kI;
        CHECK(std::abs(det - closed) <= 1e-10 * std::abs(closed));
    }
}

TEST_CASE("chain gradient and hessian match finite differences") {
    std::mt19937_64 rng(24);
    const double h = 1e-5;
    const ChainSpec spec{1, 2, 1};
    for (int k = 0; k < 25; ++k) {
        const double s1 = uniform(rng, 0.9, 1.0);
        const double s2 = uniform(rng, 0.9, 1.0);
        const PotentialParams p = PotentialParams::chain(Sign::Plus, s1, s2, spec);
        const Zvec z = random_domain_point(rng, p.dimension());

        const Zvec g = wclab::chain_gradient(p, z);
        const auto hess = wclab::chain_hessian(p, z);
        for (int j = 0; j < p.dimension(); ++j) {
            Zvec zp = z, zm = z;
            zp[j] += h;
            zm[j] -= h;
            const cplx fd = (wclab::chain_potential(p, zp) - wclab::chain_potential(p, zm)) /
                            (2.0 * h);
            CHECK(std::abs(g[j] - fd) <= 1e-7 * std::max(1.0, std::abs(g[j])));

            const Zvec gp = wclab::chain_gradient(p, zp);
            const Zvec gm = wclab::chain_gradient(p, zm);
            for (int i = 0; i < p.dimension(); ++i) {
                CHECK(std::abs((gp[i] - gm[i]) / (2.0 * h) - hess(i, j)) <=
                      1e-5 * std::max(1.0, std::abs(hess(i, j))));
            }
        }
    }
}

TEST_CASE("single clasp block reproduces the whitehead potential pointwise") {
    std::mt19937_64 rng(25);
    for (int k = 0; k < 30; ++k) {
        const double s1 = uniform(rng, 0.9, 1.0);
        const double s2 = uniform(rng, 0.9, 1.0);
        const PotentialParams p = PotentialParams::whitehead(Sign::Plus, s1, s2);
        const Zvec z = random_domain_point(rng, 2);
        CHECK(std::abs(wclab::chain_potential(p, z) -
                       wclab::whitehead_potential(p, z[0], z[1])) <= 1e-13);
    }
}

TEST_CASE("real part on the real simplex is the lobachevsky expression") {
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
    for (double x1 : {0.2, 0.4, 0.5, 0.62})
        for (double x2 : {0.1, 0.2, 0.3}) {
            if (x1 + x2 >= 0.95) continue;
            const double re = wclab::whitehead_potential(p, x1, x2).real();
            const double expect = (-2.0 * wclab::lobachevsky(kPi * (x1 + x2)) +
                                   2.0 * wclab::lobachevsky(kPi * x2) +
                                   wclab::lobachevsky(kPi * x1)) /
                                  kPi;
            CHECK(std::abs(re - expect) <= 1e-12);
        }
}

TEST_CASE("cut monitor and domain predicate") {
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
    CHECK_THROWS_AS(wclab::whitehead_potential(p, cplx(1.0, 0.0), cplx(0.25, 0.0)),
                    std::domain_error);
    CHECK(wclab::in_domain(p, {cplx(0.5, 0), cplx(0.25, 0)}));
    CHECK_FALSE(wclab::in_domain(p, {cplx(-0.1, 0), cplx(0.25, 0)}));
    CHECK_FALSE(wclab::in_domain(p, {cplx(0.8, 0), cplx(0.25, 0)}));
    const PotentialParams q = PotentialParams::whitehead(Sign::Plus, 1.0, 0.9);
    CHECK_FALSE(wclab::in_domain(q, {cplx(0.7, 0), cplx(0.25, 0)}));
}

TEST_CASE("discrete potential approaches the continuum at rate 1/N") {
    const Zvec z = {cplx(0.5, 0.0), cplx(0.25, 0.0)};
    double gap_prev = 0;
    for (int N : {25, 50}) {
        const RootData root = RootData::from_order(N);
        const Coloring coloring{N, N};
        PotentialParams p = PotentialParams::whitehead(Sign::Plus, coloring.s1(root),
                                                       coloring.s2(root));
        const cplx disc = wclab::discrete_potential(p, coloring, root, z);
        const cplx cont = wclab::whitehead_potential(p, z[0], z[1]);
        const double gap = std::abs(disc - cont);
        CHECK(gap < 0.1);
        CHECK(gap > 1e-4);
        if (gap_prev > 0) {
            CHECK(gap_prev / gap > 1.4);
            CHECK(gap_prev / gap < 2.6);
        }
        gap_prev = gap;
    }
}

TEST_CASE("correction term reduces the discrete-continuum gap to second order") {
    const Zvec z = {cplx(0.5, 0.0), cplx(0.25, 0.0)};
    double resid_prev = 0;
    for (int N : {25, 50}) {
        const RootData root = RootData::from_order(N);
        const Coloring coloring{N, N};
        PotentialParams p = PotentialParams::whitehead(Sign::Plus, coloring.s1(root),
                                                       coloring.s2(root));
        const cplx disc = wclab::discrete_potential(p, coloring, root, z);
        const cplx cont = wclab::whitehead_potential(p, z[0], z[1]);
        const cplx corr = wclab::correction_term(p, coloring, root, z);
        const double resid = std::abs((disc - cont) * root.half_level - corr);
        if (resid_prev > 0) {
            const double ratio = resid_prev / resid;
            CHECK(ratio > 1.3);
            CHECK(ratio < 2.7);
        }
        resid_prev = resid;
    }
}

TEST_CASE("correction term for the twisted chain keeps the second-order scaling") {
    // Exercises the twist contribution 2 pi i a (z1 - 1/2).
    const ChainSpec spec{1, 1, 1};
    const Zvec z = {cplx(0.47, 0.0), cplx(0.23, 0.0), cplx(0.26, 0.0)};
    double resid_prev = 0;
    for (int N : {25, 50}) {
        const RootData root = RootData::from_order(N);
        const Coloring coloring{N, N};
        PotentialParams p = PotentialParams::chain(Sign::Plus, coloring.s1(root),
                                                   coloring.s2(root), spec);
        const cplx disc = wclab::discrete_potential(p, coloring, root, z);
        const cplx cont = wclab::chain_potential(p, z);
        const cplx corr = wclab::correction_term(p, coloring, root, z);
        const double resid = std::abs((disc - cont) * root.half_level - corr);
        if (resid_prev > 0) {
            const double ratio = resid_prev / resid;
            CHECK(ratio > 1.3);
            CHECK(ratio < 2.7);
        }
        resid_prev = resid;
    }
}

TEST_CASE("correction term with one clasp is the plain five-log half-sum") {
    const RootData root = RootData::from_order(40);
    const Coloring coloring{40, 38};
    const PotentialParams p = PotentialParams::whitehead(Sign::Plus, coloring.s1(root),
                                                         coloring.s2(root));
    const Zvec z = {cplx(0.52, 0.01), cplx(0.24, -0.01)};
    const cplx got = wclab::correction_term(p, coloring, root, z);

    // Independent recomputation of E from its definition.
    const double m2 = coloring.s2(root);
    const cplx twopii(0.0, 2.0 * kPi);
    auto e = [&](cplx w) { return std::exp(twopii * w); };
    const cplx expect = 0.5 * (std::log(1.0 - e(m2 - 1.0 - z[0] - z[1])) -
                               std::log(1.0 - e(m2 - 1.0 - z[1])) - std::log(1.0 - e(z[1])) +
                               std::log(1.0 - e(z[0] + z[1])) - std::log(1.0 - e(z[0])));
    CHECK(std::abs(got - expect) < 1e-13);
}
