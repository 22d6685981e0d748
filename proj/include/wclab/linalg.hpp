#pragma once

#include <complex>
#include <vector>

#include "wclab/root_data.hpp"

namespace wclab {

// Dense complex matrix, row-major.  Sized for the small (c+d+1)-dimensional
// Hessians that show up here, not for general linear algebra.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    int size() const { return n_; }
    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

// LU factorization with partial pivoting.
struct LuFactors {
    CMatrix lu;
    std::vector<int> pivot;
    int permutation_sign = 1;
    bool singular = false;
    double min_pivot = 0.0;

    cplx determinant() const;
    std::vector<cplx> solve(const std::vector<cplx>& rhs) const;
};

LuFactors lu_decompose(CMatrix a);

cplx determinant(const CMatrix& a);

// Least-squares fit y ~ alpha*x + beta*log(x) + gamma.  Normal equations
// accumulated in long double.  Throws std::invalid_argument for fewer than
// 4 distinct abscissae or a singular design.
struct LogLinearFit {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double residual = 0;  // rms of fit residuals
};

LogLinearFit fit_loglinear(const std::vector<std::pair<double, double>>& xy);

}  // namespace wclab
