#pragma once

#include <vector>

#include "wclab/potential.hpp"

namespace wclab {

// Exponentiated gluing variables: Z1 = e^{2 pi i z1}, W_i = e^{2 pi i z_{i+1}},
// U_i = 1/(Z1 W_i) by construction, and boundary parameters B_l = e^{2 pi i s_l}.
struct ShapeAssignment {
    cplx Z1;
    std::vector<cplx> W;  // one per clasp block (clasps first, then mirror clasps)
    std::vector<cplx> U;
    cplx B1;
    cplx B2;
    int clasps = 1;
    int mirror_clasps = 0;
    int full_twists = 0;
    Sign sign = Sign::Plus;
};

ShapeAssignment shapes_from_coordinates(const PotentialParams& params, const Zvec& z);

// Deviations of the edge products from 1 together with the boundary
// holonomies.  For the Whitehead link the six displayed vertex products
// around the belt and clasp tori are evaluated literally (with
// A' = 1/(1-A), A'' = 1 - 1/A); for longer chains each clasp block
// contributes its reduced edge equation and the belt contributes the
// twisted product equation.
struct GluingReport {
    std::vector<cplx> edge_residuals;  // product - required value
    cplx meridian_m1;                  // should equal B1 (B1^{-1} for the - sign)
    cplx longitude_l2;                 // should equal B2^2

    double max_edge_residual() const;
};

GluingReport gluing_residuals(const ShapeAssignment& shapes);

// Bloch-Wigner volume sum: five D-terms per clasp block, mirrored signs
// for mirror blocks.  Equals 2*pi*Re Phi at critical points.
double bloch_wigner_volume(const PotentialParams& params, const Zvec& z);

// |Re Phi - V/(2 pi) - sum_k y_k dRePhi/dy_k| with the y-derivatives taken
// from the analytic gradient through the Cauchy-Riemann equations.  An
// identity on the domain, so this is a pure roundoff measure.
double differential_residual(const PotentialParams& params, const Zvec& z);

// Growth-rate bound for clasp coefficients:
// f(x,y,s) = (1/pi)[L(pi s-pi x-pi y) - L(pi s-pi y) + L(pi y) - L(pi x+pi y) + L(pi x)]
// on Delta_s = {x,y >= 0, x+y <= s, s in [0,1]}.  Throws std::domain_error
// outside Delta_s.
double clasp_bound_f(double x, double y, double s);

struct ClaspBoundMax {
    double x = 0;
    double y = 0;
    double s = 0;
    double value = 0;
};

// Deterministic coarse grid (step 1e-2) followed by local refinement; the
// refinement polishes with Newton on the analytic gradient away from the
// lattice singularities of L'.
ClaspBoundMax maximize_clasp_bound();

// (1/(N+1/2)) log c_M(n,l) at colors matched to the ratios (x, y, s):
// M = round(s(N+1/2)), n = round(x(N+1/2)), l = round(y(N+1/2)).
// Converges to clasp_bound_f(x,y,s) as N grows.
double clasp_coeff_log_growth(double x, double y, double s, int N);

}  // namespace wclab
