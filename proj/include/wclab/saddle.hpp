#pragma once

#include <string>
#include <vector>

#include "wclab/potential.hpp"

namespace wclab {

struct SolveOptions {
    double tolerance = 1e-12;       // on the gradient norm
    int max_iterations = 50;
    double degeneracy_floor = 1e-6; // on |det Hess|
};

struct CriticalPointResult {
    Zvec z_star;
    double residual_norm = 0;
    cplx hess_det;
    cplx value;       // Phi(z*)
    double volume = 0;   // 2*pi*Re value
    double cs_part = 0;  // 2*pi*Im value
    int iterations = 0;
};

// Damped Newton iteration with the analytic Hessian as Jacobian.
// Throws std::runtime_error on non-convergence, a singular or degenerate
// Hessian, or domain exit.
CriticalPointResult solve_critical(const PotentialParams& params, const Zvec& z0,
                                   const SolveOptions& opts = {});

// Symmetric starting guess near the known critical point at s = (1,1).
Zvec default_seed(const PotentialParams& params);

struct Waypoint {
    cplx s1;
    cplx s2;
    CriticalPointResult result;
};

struct ContinuationPath {
    std::vector<Waypoint> waypoints;
    bool reached_target = false;
    std::string failure_reason;

    const CriticalPointResult& final_result() const { return waypoints.back().result; }
};

// Linear homotopy in (s1, s2) from (1,1) to the target, warm-starting each
// solve from the previous critical point and bisecting the step on
// failure (bounded retry budget).  On path failure the last good waypoint
// is retained and reached_target is false.
ContinuationPath continue_path(PotentialParams params, cplx target_s1, cplx target_s2,
                               int steps, const SolveOptions& opts = {});

// |Phi^+(z^+) - Phi^-(z^-)| at the continued critical points.
double plus_minus_agreement(const PotentialParams& params, cplx s1, cplx s2,
                            const SolveOptions& opts = {});

// |Re Phi at s1 - Re Phi at 2-s1| (reflection u1 -> -u1) for the + sign.
double evenness_gap(const PotentialParams& params, cplx s1, cplx s2,
                    const SolveOptions& opts = {});

}  // namespace wclab
