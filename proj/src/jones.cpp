#include "wclab/jones.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;

// All powers of t appearing in the sums are integer powers of
// omega = exp(2 pi i/r): t^k = omega^{2k} and t^{k/2} = omega^{k}, reduced
// exactly mod r.  The table keeps one polar evaluation per residue.
template <typename Real>
class OmegaTable {
public:
    explicit OmegaTable(int r) : r_(r), pow_(r) {
        for (int j = 0; j < r; ++j)
            pow_[j] = std::polar<Real>(Real(1), Real(2) * std::numbers::pi_v<Real> * Real(j) / Real(r));
    }

    std::complex<Real> omega(long long k) const {
        long long m = k % r_;
        if (m < 0) m += r_;
        return pow_[static_cast<size_t>(m)];
    }
    std::complex<Real> t_int(long long k) const { return omega(2 * k); }
    std::complex<Real> t_half(long long num) const { return omega(num); }  // t^{num/2}

private:
    int r_;
    std::vector<std::complex<Real>> pow_;
};

template <typename Real>
struct KahanSum {
    std::complex<Real> sum{};
    std::complex<Real> carry{};

    void add(std::complex<Real> v) {
        const std::complex<Real> y = v - carry;
        const std::complex<Real> t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// C~(n, t^{orientation}; M2) for all n, via prefix products over n at
// fixed l: one table costs O(M2^2).
template <typename Real>
std::vector<std::complex<Real>> clasp_column(int M2, const OmegaTable<Real>& w, int orientation) {
    const long long e = orientation;  // +1 for t, -1 for t^{-1}
    std::vector<std::complex<Real>> out(M2);
    std::vector<std::complex<Real>> prod(M2, std::complex<Real>(1));
    const std::complex<Real> pre = w.t_int(e * static_cast<long long>(M2) * (M2 - 1) / 2);

    for (int n = 0; n < M2; ++n) {
        if (n > 0) {
            const std::complex<Real> inv_denom = Real(1) / (Real(1) - w.t_int(e * n));
            for (int l = 0; l <= M2 - 1 - n; ++l) {
                const std::complex<Real> f1 = Real(1) - w.t_int(e * static_cast<long long>(M2 - l - n));
                const std::complex<Real> f2 = Real(1) - w.t_int(e * static_cast<long long>(l + n));
                prod[l] *= f1 * f2 * inv_denom;
            }
        }
        KahanSum<Real> acc;
        for (int l = 0; l <= M2 - 1 - n; ++l)
            acc.add(w.t_int(-e * static_cast<long long>(M2) * (l + n)) * prod[l]);
        out[n] = pre * acc.sum;
    }
    return out;
}

template <typename Real>
std::complex<Real> whitehead_sum(int M1, int M2, const OmegaTable<Real>& w,
                                 const std::vector<std::complex<Real>>& table) {
    KahanSum<Real> acc;
    for (int n = 0; n < M2; ++n) {
        const long long num = static_cast<long long>(M1) * (2 * n + 1);
        const std::complex<Real> bracket = w.t_half(num) - w.t_half(-num);
        acc.add(bracket * table[n]);
    }
    const std::complex<Real> denom = w.t_half(1) - w.t_half(-1);
    return w.t_half(static_cast<long long>(M2) * M2 - 1) * acc.sum / denom;
}

template <typename Real>
std::complex<Real> chain_sum(const ChainSpec& spec, int M1, int M2, const OmegaTable<Real>& w,
                             const std::vector<std::complex<Real>>& direct,
                             const std::vector<std::complex<Real>>& mirror) {
    KahanSum<Real> acc;
    for (int n = 0; n < M2; ++n) {
        const long long num = static_cast<long long>(M1) * (2 * n + 1);
        std::complex<Real> term = w.t_half(num) - w.t_half(-num);
        term *= w.t_int(static_cast<long long>(spec.full_twists) * n * (n + 1));
        for (int k = 0; k < spec.clasps; ++k) term *= direct[n];
        for (int k = 0; k < spec.mirror_clasps; ++k) term *= mirror[n];
        acc.add(term);
    }
    const std::complex<Real> denom = w.t_half(1) - w.t_half(-1);
    return acc.sum / denom;
}

void check_colors(const Coloring& coloring, const RootData& root) {
    if (coloring.belt_color < 1 || coloring.belt_color > root.N ||
        coloring.clasp_color < 1 || coloring.clasp_color > root.N)
        throw std::invalid_argument("coloring out of range: need 1 <= M1, M2 <= N");
}

void check_spec(const ChainSpec& spec) {
    if (spec.clasps < 0 || spec.mirror_clasps < 0 || spec.clasps + spec.mirror_clasps < 1)
        throw std::invalid_argument("chain spec: need c, d >= 0 and c + d >= 1");
}

template <typename Real>
cplx eval_whitehead(const Coloring& coloring, const RootData& root) {
    const OmegaTable<Real> w(root.r);
    const auto table = clasp_column<Real>(coloring.clasp_color, w, +1);
    const auto v = whitehead_sum<Real>(coloring.belt_color, coloring.clasp_color, w, table);
    return cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

template <typename Real>
cplx eval_chain(const ChainSpec& spec, const Coloring& coloring, const RootData& root) {
    const OmegaTable<Real> w(root.r);
    const auto direct = clasp_column<Real>(coloring.clasp_color, w, +1);
    const auto mirror = clasp_column<Real>(coloring.clasp_color, w, -1);
    const auto v = chain_sum<Real>(spec, coloring.belt_color, coloring.clasp_color, w, direct, mirror);
    return cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

}  // namespace

ClaspTable::ClaspTable(int clasp_color, const RootData& root, Precision precision) {
    if (clasp_color < 1 || clasp_color > root.N)
        throw std::invalid_argument("ClaspTable: need 1 <= M2 <= N");
    if (precision == Precision::Double) {
        const OmegaTable<double> w(root.r);
        direct_ = clasp_column<double>(clasp_color, w, +1);
        mirror_ = clasp_column<double>(clasp_color, w, -1);
    } else {
        const OmegaTable<long double> w(root.r);
        const auto d = clasp_column<long double>(clasp_color, w, +1);
        const auto m = clasp_column<long double>(clasp_color, w, -1);
        direct_.resize(d.size());
        mirror_.resize(m.size());
        for (size_t i = 0; i < d.size(); ++i) {
            direct_[i] = cplx(static_cast<double>(d[i].real()), static_cast<double>(d[i].imag()));
            mirror_[i] = cplx(static_cast<double>(m[i].real()), static_cast<double>(m[i].imag()));
        }
    }
}

cplx clasp_coeff(int n, const Coloring& coloring, const RootData& root, bool mirror,
                 Precision precision) {
    if (n < 0 || n > coloring.clasp_color - 1)
        throw std::invalid_argument("clasp_coeff: need 0 <= n <= M2 - 1");
    const ClaspTable table(coloring.clasp_color, root, precision);
    return mirror ? table.mirror(n) : table.direct(n);
}

cplx jones_whitehead(const Coloring& coloring, const RootData& root, Precision precision) {
    check_colors(coloring, root);
    return precision == Precision::Double ? eval_whitehead<double>(coloring, root)
                                          : eval_whitehead<long double>(coloring, root);
}

cplx jones_whitehead(const Coloring& coloring, const RootData& root, const ClaspTable& table) {
    check_colors(coloring, root);
    if (table.color() != coloring.clasp_color)
        throw std::invalid_argument("jones_whitehead: table built for a different M2");
    const OmegaTable<double> w(root.r);
    std::vector<cplx> col(table.color());
    for (int n = 0; n < table.color(); ++n) col[n] = table.direct(n);
    return whitehead_sum<double>(coloring.belt_color, coloring.clasp_color, w, col);
}

cplx jones_chain(const ChainSpec& spec, const Coloring& coloring, const RootData& root,
                 Precision precision) {
    check_spec(spec);
    check_colors(coloring, root);
    return precision == Precision::Double ? eval_chain<double>(spec, coloring, root)
                                          : eval_chain<long double>(spec, coloring, root);
}

cplx jones_chain(const ChainSpec& spec, const Coloring& coloring, const RootData& root,
                 const ClaspTable& table) {
    check_spec(spec);
    check_colors(coloring, root);
    if (table.color() != coloring.clasp_color)
        throw std::invalid_argument("jones_chain: table built for a different M2");
    const OmegaTable<double> w(root.r);
    std::vector<cplx> direct(table.color()), mirror(table.color());
    for (int n = 0; n < table.color(); ++n) {
        direct[n] = table.direct(n);
        mirror[n] = table.mirror(n);
    }
    return chain_sum<double>(spec, coloring.belt_color, coloring.clasp_color, w, direct, mirror);
}

struct ChainEvaluator::Impl {
    ChainSpec spec;
    int clasp_color;
    OmegaTable<double> omega;
    std::vector<cplx> direct;
    std::vector<cplx> mirror;

    Impl(const ChainSpec& s, int M2, const RootData& root)
        : spec(s),
          clasp_color(M2),
          omega(root.r),
          direct(clasp_column<double>(M2, omega, +1)),
          mirror(clasp_column<double>(M2, omega, -1)) {}
};

ChainEvaluator::ChainEvaluator(const ChainSpec& spec, int clasp_color, const RootData& root) {
    check_spec(spec);
    if (clasp_color < 1 || clasp_color > root.N)
        throw std::invalid_argument("ChainEvaluator: need 1 <= M2 <= N");
    impl_ = std::make_unique<Impl>(spec, clasp_color, root);
}

ChainEvaluator::~ChainEvaluator() = default;
ChainEvaluator::ChainEvaluator(ChainEvaluator&&) noexcept = default;
ChainEvaluator& ChainEvaluator::operator=(ChainEvaluator&&) noexcept = default;

cplx ChainEvaluator::operator()(int belt_color) const {
    return chain_sum<double>(impl_->spec, belt_color, impl_->clasp_color, impl_->omega,
                             impl_->direct, impl_->mirror);
}

double GrowthFit::volume_estimate() const { return 2.0 * kPi * alpha; }

GrowthFit growth_rate(const std::vector<std::pair<double, double>>& n_and_logabs) {
    std::vector<std::pair<double, double>> xy;
    xy.reserve(n_and_logabs.size());
    for (const auto& [n, y] : n_and_logabs) xy.emplace_back(n + 0.5, y);
    const LogLinearFit fit = fit_loglinear(xy);
    GrowthFit g;
    g.alpha = fit.alpha;
    g.beta = fit.beta;
    g.gamma = fit.gamma;
    g.residual = fit.residual;
    return g;
}

}  // namespace wclab
