#pragma once

#include <complex>

#include "wclab/root_data.hpp"

namespace wclab {

// Dilogarithm Li2(z) on the principal branch, cut along [1, inf).
// Power/Bernoulli series after inversion and reflection; relative error
// below 1e-14 for |z| <= 10.  Throws std::domain_error on the cut.
cplx dilog(cplx z);

// Lobachevsky function Lambda(theta) = -int_0^theta log|2 sin t| dt,
// odd and pi-periodic.  Absolute error below 1e-14.
double lobachevsky(double theta);

// Bloch-Wigner function D(z) = Im Li2(z) + log|z| * Arg(1-z).
// Vanishes on the real axis; throws std::domain_error at z in {0, 1}.
double bloch_wigner(cplx z);

// Contour quadrature controls for the quantum dilogarithm.  The contour
// runs along the real axis with an upper semicircle of the given radius
// around the triple pole at the origin; tails are truncated where the
// integrand magnitude falls below tail_cutoff, and the panel count is
// doubled until two successive estimates differ by less than
// target_abs_error.
struct QuadratureConfig {
    double semicircle_radius = 0.5;  // must lie in (0,1)
    int panel_count = 8;             // initial panels per contour segment
    double tail_cutoff = 1e-18;
    double target_abs_error = 1e-11;
};

// Quantum dilogarithm phi_r(z) for level r = 2N+1, defined for
// -pi/r < Re z < pi + pi/r.  The level may be any real >= 3 so that
// mid-level comparisons (r vs 2r) are possible.
// Throws std::domain_error outside the strip and std::runtime_error if
// panel doubling fails to reach target_abs_error.
cplx quantum_dilog(cplx z, double level, const QuadratureConfig& cfg = {});
cplx quantum_dilog(cplx z, const RootData& root, const QuadratureConfig& cfg = {});

}  // namespace wclab
