#include "wclab/turaev_viro.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wclab/special_functions.hpp"

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;

long double color_sum_squares(const ChainSpec& spec, const RootData& root) {
    long double total = 0.0L;
    for (int M2 = 1; M2 <= root.N; ++M2) {
        const ChainEvaluator eval(spec, M2, root);
        for (int M1 = 1; M1 <= root.N; ++M1) {
            const cplx j = eval(M1);
            total += static_cast<long double>(j.real()) * j.real() +
                     static_cast<long double>(j.imag()) * j.imag();
        }
    }
    return total;
}

TVResult assemble(const ChainSpec& spec, int r, long double sum_squares) {
    const int n = spec.components();
    const double s = 2.0 * std::sin(2.0 * kPi / r);
    const long double prefactor = std::pow(2.0L, n - 1) * static_cast<long double>(s) * s / r;
    TVResult out;
    out.r = r;
    out.value = static_cast<double>(prefactor * sum_squares);
    out.log_scaled = static_cast<double>(
        (2.0L * std::numbers::pi_v<long double> / r) *
        (std::log(prefactor) + std::log(sum_squares)));
    return out;
}

}  // namespace

TVResult tv_from_jones(const ChainSpec& spec, int r) {
    if (spec.components() != 2)
        throw std::invalid_argument(
            "tv_from_jones: the full color sum needs independent clasp colors for 3+ components; "
            "use tv_equal_clasp_subsum for the equal-color diagonal");
    const RootData root = RootData::from_level(r);
    return assemble(spec, r, color_sum_squares(spec, root));
}

TVResult tv_equal_clasp_subsum(const ChainSpec& spec, int r) {
    const RootData root = RootData::from_level(r);
    return assemble(spec, r, color_sum_squares(spec, root));
}

TVGrowth tv_growth(const ChainSpec& spec, const std::vector<int>& levels) {
    if (levels.size() < 4) throw std::invalid_argument("tv_growth: need at least 4 levels");
    std::vector<std::pair<double, double>> xy;
    xy.reserve(levels.size());
    for (int r : levels) {
        const TVResult tv = spec.components() == 2 ? tv_from_jones(spec, r)
                                                   : tv_equal_clasp_subsum(spec, r);
        xy.emplace_back(static_cast<double>(r), tv.log_scaled * r / (2.0 * kPi));
    }
    TVGrowth g;
    g.fit = fit_loglinear(xy);
    g.volume_estimate = 2.0 * kPi * g.fit.alpha;
    return g;
}

AuditReport upper_bound_audit(const ChainSpec& spec, int r, double margin_constant) {
    const RootData root = RootData::from_level(r);
    AuditReport report;
    report.r = r;
    report.bound = (spec.clasps + spec.mirror_clasps) * 8.0 * lobachevsky(kPi / 4.0);
    report.max_term = -1e300;

    double max_excess_scaled = 0.0;
    for (int M2 = 1; M2 <= root.N; ++M2) {
        const ChainEvaluator eval(spec, M2, root);
        for (int M1 = 1; M1 <= root.N; ++M1) {
            const double a = std::abs(eval(M1));
            if (a == 0.0) continue;
            const double term = (2.0 * kPi / r) * 2.0 * std::log(a);
            if (term > report.max_term) {
                report.max_term = term;
                report.max_M1 = M1;
                report.max_M2 = M2;
            }
            max_excess_scaled = std::max(max_excess_scaled, (term - report.bound) * r / std::log(r));
        }
    }
    report.fitted_margin_constant = max_excess_scaled;
    const double c = margin_constant > 0 ? margin_constant : 8.0 * kPi;
    report.margin = c * std::log(static_cast<double>(r)) / r;
    report.all_bounded = report.max_term <= report.bound + report.margin;
    return report;
}

}  // namespace wclab
