#pragma once

#include <array>
#include <complex>
#include <vector>

#include "wclab/jones.hpp"
#include "wclab/linalg.hpp"
#include "wclab/root_data.hpp"
#include "wclab/special_functions.hpp"

namespace wclab {

enum class Sign { Plus, Minus };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

// Parameters of the potential Phi^{(sign)(s1,s2); a,c,d}.  The deformation
// parameters s1, s2 are accepted as complex so the holomorphic-family
// checks can probe them off the real axis; production paths use real
// values near 1.  (c,d,a) = (1,0,0) reproduces the Whitehead-link
// potential.
struct PotentialParams {
    Sign sign = Sign::Plus;
    cplx s1{1.0, 0.0};
    cplx s2{1.0, 0.0};
    int full_twists = 0;    // a
    int clasps = 1;         // c
    int mirror_clasps = 0;  // d

    int dimension() const { return clasps + mirror_clasps + 1; }

    static PotentialParams whitehead(Sign sign, cplx s1, cplx s2);
    static PotentialParams chain(Sign sign, cplx s1, cplx s2, const ChainSpec& spec);
};

// Argument vector (z_1, ..., z_{c+d+1}).
using Zvec = std::vector<cplx>;

// Re z_k > 0 for all k, Re z_1 + Re z_k < Re s2 for k >= 2.
bool in_domain(const PotentialParams& params, const Zvec& z);

// Whitehead-link potential, explicit two-variable form: linear terms plus
// five dilogarithms on principal branches.  Throws std::domain_error when
// a dilogarithm argument lands on the cut.
cplx whitehead_potential(const PotentialParams& params, cplx z1, cplx z2);
std::array<cplx, 2> whitehead_gradient(const PotentialParams& params, cplx z1, cplx z2);
CMatrix whitehead_hessian(const PotentialParams& params, cplx z1, cplx z2);

// Chain potential assembled from per-clasp blocks (psi for clasps, kappa
// for mirror clasps) around the shared coordinate z_1, plus the twist
// term.  Gradient and Hessian are analytic; the Hessian has arrowhead
// sparsity (only z_1 couples to the rest) but is returned dense since the
// dimension is tiny.
cplx chain_potential(const PotentialParams& params, const Zvec& z);
Zvec chain_gradient(const PotentialParams& params, const Zvec& z);
CMatrix chain_hessian(const PotentialParams& params, const Zvec& z);

// Per-block values (used by tests and by the Bloch-Wigner volume).
cplx clasp_block(cplx s2, cplx z1, cplx w);         // psi
cplx mirror_clasp_block(cplx s2, cplx z1, cplx w);  // kappa

// Finite-level potential built from the quantum dilogarithm: s_i replaced
// by M_i/(N+1/2) and every Li2 by phi_r at the shifted arguments.
cplx discrete_potential(const PotentialParams& params, const Coloring& coloring,
                        const RootData& root, const Zvec& z,
                        const QuadratureConfig& cfg = {});

// Coefficient of 1/(N+1/2) in discrete_potential - chain_potential (at the
// finite-level ratios): half-sums of five logarithms per block plus the
// twist contribution 2*pi*i*a*(z1 - 1/2).
cplx correction_term(const PotentialParams& params, const Coloring& coloring,
                     const RootData& root, const Zvec& z);

}  // namespace wclab
