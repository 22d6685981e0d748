#pragma once

#include <vector>

#include "wclab/jones.hpp"

namespace wclab {

struct TVResult {
    int r = 0;
    double value = 0;       // TV_r, positive
    double log_scaled = 0;  // (2*pi/r) * log value
};

// TV_r(S^3 \ L) = 2^{n-1} (2 sin(2 pi/r)/sqrt(r))^2 * sum |J_M|^2 over all
// color tuples 1 <= M_i <= (r-1)/2.  Exact for two-component chains
// (c+d = 1); chains with three or more components would need independent
// clasp colors, which the two-variable formula does not provide, so those
// throw std::invalid_argument.  Use tv_equal_clasp_subsum for the
// equal-clasp diagonal of longer chains.
TVResult tv_from_jones(const ChainSpec& spec, int r);

// Equal-clasp-color partial sum for chains with c+d >= 2: every clasp and
// mirror clasp shares the color M2.  A documented lower bound for the full
// multi-index sum, not the full Turaev-Viro invariant.
TVResult tv_equal_clasp_subsum(const ChainSpec& spec, int r);

struct TVGrowth {
    LogLinearFit fit;           // log TV = alpha*r + beta*log r + gamma
    double volume_estimate = 0; // 2*pi*alpha
};

TVGrowth tv_growth(const ChainSpec& spec, const std::vector<int>& levels);

// Per-color audit of (2*pi/r) log |J|^2 against (c+d) v8 + C log(r)/r.
struct AuditReport {
    int r = 0;
    int max_M1 = 0;                 // maximizing color pair
    int max_M2 = 0;
    double max_term = 0;            // largest (2*pi/r) log |J|^2
    double bound = 0;               // (c+d) * 8 Lambda(pi/4)
    double margin = 0;              // allowed excess C log(r)/r
    double fitted_margin_constant = 0;  // smallest C that would bound the data
    bool all_bounded = false;
};

AuditReport upper_bound_audit(const ChainSpec& spec, int r, double margin_constant = 0.0);

}  // namespace wclab
