#include "wclab/saddle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;

double grad_norm(const Zvec& g) {
    double s = 0;
    for (const cplx& v : g) s += std::norm(v);
    return std::sqrt(s);
}

Zvec dispatch_gradient(const PotentialParams& p, const Zvec& z) { return chain_gradient(p, z); }

CMatrix dispatch_hessian(const PotentialParams& p, const Zvec& z) { return chain_hessian(p, z); }

cplx dispatch_value(const PotentialParams& p, const Zvec& z) { return chain_potential(p, z); }

}  // namespace

Zvec default_seed(const PotentialParams& params) {
    Zvec z(params.dimension(), cplx(0.25, 0.0));
    z[0] = cplx(0.5, 0.0);
    return z;
}

CriticalPointResult solve_critical(const PotentialParams& params, const Zvec& z0,
                                   const SolveOptions& opts) {
    if (static_cast<int>(z0.size()) != params.dimension())
        throw std::invalid_argument("solve_critical: seed dimension must be c + d + 1");
    if (!(opts.tolerance > 0)) throw std::invalid_argument("solve_critical: tolerance must be > 0");
    if (!in_domain(params, z0))
        throw std::runtime_error("solve_critical: seed outside the potential domain");

    Zvec z = z0;
    Zvec g = dispatch_gradient(params, z);
    double res = grad_norm(g);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (res <= opts.tolerance) {
            CriticalPointResult out;
            out.z_star = z;
            out.residual_norm = res;
            const LuFactors lu = lu_decompose(dispatch_hessian(params, z));
            out.hess_det = lu.determinant();
            if (std::abs(out.hess_det) < opts.degeneracy_floor)
                throw std::runtime_error("solve_critical: |det Hess| below degeneracy floor");
            out.value = dispatch_value(params, z);
            out.volume = 2.0 * kPi * out.value.real();
            out.cs_part = 2.0 * kPi * out.value.imag();
            out.iterations = iter;
            return out;
        }

        const LuFactors lu = lu_decompose(dispatch_hessian(params, z));
        if (lu.singular || std::abs(lu.determinant()) < opts.degeneracy_floor)
            throw std::runtime_error("solve_critical: singular Hessian during iteration");
        const std::vector<cplx> step = lu.solve(g);

        // Step-halving line search on the gradient norm.
        bool accepted = false;
        for (double lambda = 1.0; lambda >= 1.0 / 4096.0; lambda *= 0.5) {
            Zvec trial(z.size());
            for (size_t k = 0; k < z.size(); ++k) trial[k] = z[k] - lambda * step[k];
            if (!in_domain(params, trial)) continue;
            try {
                Zvec gt = dispatch_gradient(params, trial);
                const double rt = grad_norm(gt);
                if (rt < res) {
                    z = std::move(trial);
                    g = std::move(gt);
                    res = rt;
                    accepted = true;
                    break;
                }
            } catch (const std::domain_error&) {
                // crossed a cut; shrink the step
            }
        }
        if (!accepted)
            throw std::runtime_error("solve_critical: line search failed (domain exit or stagnation)");
    }
    throw std::runtime_error("solve_critical: no convergence within max_iterations");
}

ContinuationPath continue_path(PotentialParams params, cplx target_s1, cplx target_s2, int steps,
                               const SolveOptions& opts) {
    if (steps < 1) throw std::invalid_argument("continue_path: steps must be >= 1");
    const cplx start_s1(1.0, 0.0), start_s2(1.0, 0.0);

    ContinuationPath path;
    params.s1 = start_s1;
    params.s2 = start_s2;
    CriticalPointResult current = solve_critical(params, default_seed(params), opts);
    path.waypoints.push_back({start_s1, start_s2, current});

    if (target_s1 == start_s1 && target_s2 == start_s2) {
        path.reached_target = true;
        return path;
    }

    const double base = 1.0 / steps;
    const double min_step = base / 1024.0;  // retry budget: 10 halvings
    double fraction = 0.0;
    double h = base;
    while (fraction < 1.0) {
        const double next = std::min(1.0, fraction + h);
        params.s1 = start_s1 + next * (target_s1 - start_s1);
        params.s2 = start_s2 + next * (target_s2 - start_s2);
        try {
            CriticalPointResult res = solve_critical(params, current.z_star, opts);
            double displacement = 0.0;
            for (size_t k = 0; k < res.z_star.size(); ++k)
                displacement = std::max(displacement, std::abs(res.z_star[k] - current.z_star[k]));
            if (displacement > 0.3) throw std::runtime_error("waypoint jumped branches");
            current = std::move(res);
            path.waypoints.push_back({params.s1, params.s2, current});
            fraction = next;
            h = std::min(base, 2.0 * h);
        } catch (const std::exception& e) {
            h *= 0.5;
            if (h < min_step) {
                path.failure_reason = e.what();
                return path;
            }
        }
    }
    path.reached_target = true;
    return path;
}

double plus_minus_agreement(const PotentialParams& params, cplx s1, cplx s2,
                            const SolveOptions& opts) {
    PotentialParams plus = params;
    plus.sign = Sign::Plus;
    PotentialParams minus = params;
    minus.sign = Sign::Minus;
    const ContinuationPath pp = continue_path(plus, s1, s2, 8, opts);
    const ContinuationPath pm = continue_path(minus, s1, s2, 8, opts);
    if (!pp.reached_target || !pm.reached_target)
        throw std::runtime_error("plus_minus_agreement: continuation failed");
    return std::abs(pp.final_result().value - pm.final_result().value);
}

double evenness_gap(const PotentialParams& params, cplx s1, cplx s2, const SolveOptions& opts) {
    PotentialParams plus = params;
    plus.sign = Sign::Plus;
    const ContinuationPath pa = continue_path(plus, s1, s2, 8, opts);
    const ContinuationPath pb = continue_path(plus, 2.0 - s1, s2, 8, opts);
    if (!pa.reached_target || !pb.reached_target)
        throw std::runtime_error("evenness_gap: continuation failed");
    return std::abs(pa.final_result().value.real() - pb.final_result().value.real());
}

}  // namespace wclab
