#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "wclab/linalg.hpp"
#include "wclab/root_data.hpp"

namespace wclab {

// Whitehead chain W_{a,1,c,d}: a full twists, one belt, c clasps and
// d mirror clasps.  Only the single-belt family has a closed evaluation
// formula, so the belt count is fixed at 1.
struct ChainSpec {
    int full_twists = 0;    // a, may be negative
    int clasps = 1;         // c >= 0
    int mirror_clasps = 0;  // d >= 0, c + d >= 1

    int components() const { return 1 + clasps + mirror_clasps; }
};

// Colors: belt gets M1, every clasp gets M2.  Valid range 1..N.
struct Coloring {
    int belt_color = 1;   // M1
    int clasp_color = 1;  // M2

    double s1(const RootData& root) const { return belt_color / root.half_level; }
    double s2(const RootData& root) const { return clasp_color / root.half_level; }
};

enum class Precision { Double, Extended };

// Clasp-tangle coefficients C~(n, t^{+1}; M2) and C~(n, t^{-1}; M2) for
// n = 0..M2-1, built column-by-column with prefix products (O(M2^2) total).
// Immutable after construction; shareable across threads.
class ClaspTable {
public:
    ClaspTable(int clasp_color, const RootData& root, Precision precision = Precision::Double);

    int color() const { return static_cast<int>(direct_.size()); }
    cplx direct(int n) const { return direct_.at(n); }   // C~(n, t; M2)
    cplx mirror(int n) const { return mirror_.at(n); }   // C~(n, t^{-1}; M2)

private:
    std::vector<cplx> direct_;
    std::vector<cplx> mirror_;
};

cplx clasp_coeff(int n, const Coloring& coloring, const RootData& root, bool mirror = false,
                 Precision precision = Precision::Double);

// Unnormalized J_{M1,M2}(WL, t) at t = exp(2 pi i/(N+1/2)).
cplx jones_whitehead(const Coloring& coloring, const RootData& root,
                     Precision precision = Precision::Double);
cplx jones_whitehead(const Coloring& coloring, const RootData& root, const ClaspTable& table);

// Unnormalized J_{M1,M2}(W_{a,1,c,d}, t).  The framing prefactor for
// c+d=1 is omitted; it is a unit-modulus phase.
cplx jones_chain(const ChainSpec& spec, const Coloring& coloring, const RootData& root,
                 Precision precision = Precision::Double);
cplx jones_chain(const ChainSpec& spec, const Coloring& coloring, const RootData& root,
                 const ClaspTable& table);

// Sweep helper: fixes (spec, M2, root) and evaluates J for many belt
// colors at O(M2) each, sharing the clasp tables and root-of-unity powers.
class ChainEvaluator {
public:
    ChainEvaluator(const ChainSpec& spec, int clasp_color, const RootData& root);
    ~ChainEvaluator();
    ChainEvaluator(ChainEvaluator&&) noexcept;
    ChainEvaluator& operator=(ChainEvaluator&&) noexcept;

    cplx operator()(int belt_color) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Fit log|J| = alpha*(N+1/2) + beta*log(N+1/2) + gamma over samples of
// (N, log|J|).  2*pi*alpha estimates the exponential growth rate (the
// volume); beta the power-law exponent.
struct GrowthFit {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double residual = 0;

    double volume_estimate() const;  // 2*pi*alpha
};

GrowthFit growth_rate(const std::vector<std::pair<double, double>>& n_and_logabs);

}  // namespace wclab
