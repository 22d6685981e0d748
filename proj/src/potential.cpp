#include "wclab/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI(0.0, 2.0 * kPi);

cplx exp2pii(cplx w) { return std::exp(kTwoPiI * w); }

// Cut-proximity monitor: Li2 and log(1-x) share the cut x in [1, inf).
void check_off_cut(cplx x, const char* where) {
    if (std::abs(x.imag()) < 1e-10 && x.real() > 1.0 - 1e-10)
        throw std::domain_error(std::string(where) + ": argument within 1e-10 of the cut [1, inf)");
}

cplx li2(cplx x, const char* where) {
    check_off_cut(x, where);
    return dilog(x);
}

cplx log1m(cplx x, const char* where) {
    check_off_cut(x, where);
    return std::log(1.0 - x);
}

cplx ratio(cplx x) { return x / (1.0 - x); }

struct ClaspArgs {
    cplx A, B, K, F, G;
};

ClaspArgs clasp_args(cplx s2, cplx z1, cplx w) {
    return {exp2pii(s2 - 1.0 - z1 - w), exp2pii(s2 - 1.0 - w), exp2pii(w), exp2pii(z1 + w),
            exp2pii(z1)};
}

struct MirrorArgs {
    cplx A, B, C, D, G;
};

MirrorArgs mirror_args(cplx s2, cplx z1, cplx w) {
    return {exp2pii(-(s2 - 1.0) + z1 + w), exp2pii(-(s2 - 1.0) + w), exp2pii(-w),
            exp2pii(-z1 - w), exp2pii(-z1)};
}

}  // namespace

PotentialParams PotentialParams::whitehead(Sign sign, cplx s1, cplx s2) {
    return {sign, s1, s2, 0, 1, 0};
}

PotentialParams PotentialParams::chain(Sign sign, cplx s1, cplx s2, const ChainSpec& spec) {
    return {sign, s1, s2, spec.full_twists, spec.clasps, spec.mirror_clasps};
}

bool in_domain(const PotentialParams& params, const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension()) return false;
    for (const cplx& zk : z)
        if (!(zk.real() > 0.0)) return false;
    for (size_t k = 1; k < z.size(); ++k)
        if (!(z[0].real() + z[k].real() < params.s2.real())) return false;
    return true;
}

cplx clasp_block(cplx s2, cplx z1, cplx w) {
    const ClaspArgs a = clasp_args(s2, z1, w);
    const cplx dilogs = li2(a.A, "clasp_block") - li2(a.B, "clasp_block") +
                        li2(a.K, "clasp_block") - li2(a.F, "clasp_block") +
                        li2(a.G, "clasp_block");
    return -kTwoPiI * (s2 - 1.0) * (z1 + w) + dilogs / kTwoPiI;
}

cplx mirror_clasp_block(cplx s2, cplx z1, cplx w) {
    const MirrorArgs a = mirror_args(s2, z1, w);
    const cplx dilogs = -li2(a.A, "mirror_clasp_block") + li2(a.B, "mirror_clasp_block") -
                        li2(a.C, "mirror_clasp_block") + li2(a.D, "mirror_clasp_block") -
                        li2(a.G, "mirror_clasp_block");
    return kTwoPiI * (s2 - 1.0) * (z1 + w) + dilogs / kTwoPiI;
}

cplx whitehead_potential(const PotentialParams& params, cplx z1, cplx z2) {
    const ClaspArgs a = clasp_args(params.s2, z1, z2);
    const cplx dilogs = li2(a.A, "whitehead_potential") - li2(a.B, "whitehead_potential") +
                        li2(a.K, "whitehead_potential") - li2(a.F, "whitehead_potential") +
                        li2(a.G, "whitehead_potential");
    return sign_value(params.sign) * kTwoPiI * (params.s1 - 1.0) * (z1 - 0.5) -
           kTwoPiI * (params.s2 - 1.0) * (z1 + z2) + dilogs / kTwoPiI;
}

std::array<cplx, 2> whitehead_gradient(const PotentialParams& params, cplx z1, cplx z2) {
    const ClaspArgs a = clasp_args(params.s2, z1, z2);
    const cplx lA = log1m(a.A, "whitehead_gradient");
    const cplx lF = log1m(a.F, "whitehead_gradient");
    const cplx d1 = kTwoPiI * (sign_value(params.sign) * (params.s1 - 1.0) - (params.s2 - 1.0)) +
                    lA + lF - log1m(a.G, "whitehead_gradient");
    const cplx d2 = -kTwoPiI * (params.s2 - 1.0) + lA + lF -
                    log1m(a.B, "whitehead_gradient") - log1m(a.K, "whitehead_gradient");
    return {d1, d2};
}

CMatrix whitehead_hessian(const PotentialParams& params, cplx z1, cplx z2) {
    const ClaspArgs a = clasp_args(params.s2, z1, z2);
    const cplx qA = ratio(a.A), qB = ratio(a.B), qK = ratio(a.K), qF = ratio(a.F), qG = ratio(a.G);
    CMatrix h(2);
    h(0, 0) = kTwoPiI * (qA - qF + qG);
    h(0, 1) = h(1, 0) = kTwoPiI * (qA - qF);
    h(1, 1) = kTwoPiI * (qA - qF - qB + qK);
    return h;
}

cplx chain_potential(const PotentialParams& params, const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("chain_potential: coordinate count must be c + d + 1");
    const cplx z1 = z[0];
    cplx value = sign_value(params.sign) * kTwoPiI * (params.s1 - 1.0) * (z1 - 0.5) +
                 kTwoPiI * static_cast<double>(params.full_twists) * (z1 - 0.5) * (z1 - 0.5);
    for (int i = 0; i < params.clasps; ++i) value += clasp_block(params.s2, z1, z[1 + i]);
    for (int i = 0; i < params.mirror_clasps; ++i)
        value += mirror_clasp_block(params.s2, z1, z[1 + params.clasps + i]);
    return value;
}

Zvec chain_gradient(const PotentialParams& params, const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("chain_gradient: coordinate count must be c + d + 1");
    const cplx z1 = z[0];
    Zvec g(z.size());
    g[0] = sign_value(params.sign) * kTwoPiI * (params.s1 - 1.0) +
           2.0 * kTwoPiI * static_cast<double>(params.full_twists) * (z1 - 0.5);
    for (int i = 0; i < params.clasps; ++i) {
        const ClaspArgs a = clasp_args(params.s2, z1, z[1 + i]);
        const cplx lA = log1m(a.A, "chain_gradient");
        const cplx lF = log1m(a.F, "chain_gradient");
        g[0] += -kTwoPiI * (params.s2 - 1.0) + lA + lF - log1m(a.G, "chain_gradient");
        g[1 + i] = -kTwoPiI * (params.s2 - 1.0) + lA + lF - log1m(a.B, "chain_gradient") -
                   log1m(a.K, "chain_gradient");
    }
    for (int i = 0; i < params.mirror_clasps; ++i) {
        const int k = 1 + params.clasps + i;
        const MirrorArgs a = mirror_args(params.s2, z1, z[k]);
        const cplx lA = log1m(a.A, "chain_gradient");
        const cplx lD = log1m(a.D, "chain_gradient");
        g[0] += kTwoPiI * (params.s2 - 1.0) + lA + lD - log1m(a.G, "chain_gradient");
        g[k] = kTwoPiI * (params.s2 - 1.0) + lA + lD - log1m(a.B, "chain_gradient") -
               log1m(a.C, "chain_gradient");
    }
    return g;
}

CMatrix chain_hessian(const PotentialParams& params, const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("chain_hessian: coordinate count must be c + d + 1");
    const int n = params.dimension();
    const cplx z1 = z[0];
    CMatrix h(n);
    h(0, 0) = 2.0 * kTwoPiI * static_cast<double>(params.full_twists);
    for (int i = 0; i < params.clasps; ++i) {
        const ClaspArgs a = clasp_args(params.s2, z1, z[1 + i]);
        const cplx qA = ratio(a.A), qF = ratio(a.F);
        h(0, 0) += kTwoPiI * (qA - qF + ratio(a.G));
        h(0, 1 + i) = h(1 + i, 0) = kTwoPiI * (qA - qF);
        h(1 + i, 1 + i) = kTwoPiI * (qA - qF - ratio(a.B) + ratio(a.K));
    }
    for (int i = 0; i < params.mirror_clasps; ++i) {
        const int k = 1 + params.clasps + i;
        const MirrorArgs a = mirror_args(params.s2, z1, z[k]);
        const cplx qA = ratio(a.A), qD = ratio(a.D);
        h(0, 0) += kTwoPiI * (-qA + qD - ratio(a.G));
        h(0, k) = h(k, 0) = kTwoPiI * (-qA + qD);
        h(k, k) = kTwoPiI * (-qA + qD + ratio(a.B) - ratio(a.C));
    }
    return h;
}

cplx discrete_potential(const PotentialParams& params, const Coloring& coloring,
                        const RootData& root, const Zvec& z, const QuadratureConfig& cfg) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("discrete_potential: coordinate count must be c + d + 1");
    const double m1 = coloring.s1(root);
    const double m2 = coloring.s2(root);
    const double hshift = kPi / root.r;
    const double level = static_cast<double>(root.r);
    const cplx z1 = z[0];
    const auto phi = [&](cplx arg) { return quantum_dilog(arg, level, cfg); };

    cplx value = sign_value(params.sign) * kTwoPiI * (m1 - 1.0) * (z1 - 0.5) +
                 kTwoPiI * static_cast<double>(params.full_twists) * (z1 - 0.5) *
                     (z1 - 0.5 + 1.0 / root.half_level);
    for (int i = 0; i < params.clasps; ++i) {
        const cplx w = z[1 + i];
        const cplx block = phi(m2 * kPi - kPi * z1 - kPi * w - hshift) -
                           phi(m2 * kPi - kPi * w - hshift) + phi(kPi * w + hshift) -
                           phi(kPi * z1 + kPi * w + hshift) + phi(kPi * z1 + hshift);
        value += -kTwoPiI * (m2 - 1.0) * (z1 + w) + block / kTwoPiI;
    }
    for (int i = 0; i < params.mirror_clasps; ++i) {
        const cplx w = z[1 + params.clasps + i];
        const cplx block = phi(-kPi * (m2 - 1.0) + kPi * z1 + kPi * w + hshift) -
                           phi(-kPi * (m2 - 1.0) + kPi * w + hshift) +
                           phi(kPi - kPi * w - hshift) - phi(kPi - kPi * z1 - kPi * w - hshift) +
                           phi(kPi - kPi * z1 - hshift);
        value += kTwoPiI * (m2 - 1.0) * (z1 + w) - block / kTwoPiI;
    }
    return value;
}

cplx correction_term(const PotentialParams& params, const Coloring& coloring, const RootData& root,
                     const Zvec& z) {
    if (static_cast<int>(z.size()) != params.dimension())
        throw std::invalid_argument("correction_term: coordinate count must be c + d + 1");
    const cplx m2(coloring.s2(root), 0.0);
    const cplx z1 = z[0];
    cplx value = kTwoPiI * static_cast<double>(params.full_twists) * (z1 - 0.5);
    for (int i = 0; i < params.clasps; ++i) {
        const ClaspArgs a = clasp_args(m2, z1, z[1 + i]);
        value += 0.5 * (log1m(a.A, "correction_term") - log1m(a.B, "correction_term") -
                        log1m(a.K, "correction_term") + log1m(a.F, "correction_term") -
                        log1m(a.G, "correction_term"));
    }
    for (int i = 0; i < params.mirror_clasps; ++i) {
        const MirrorArgs a = mirror_args(m2, z1, z[1 + params.clasps + i]);
        value += 0.5 * (log1m(a.A, "correction_term") - log1m(a.B, "correction_term") -
                        log1m(a.C, "correction_term") + log1m(a.D, "correction_term") -
                        log1m(a.G, "correction_term"));
    }
    return value;
}

}  // namespace wclab
