#pragma once

#include <complex>

namespace wclab {

using cplx = std::complex<double>;

// The evaluation point t = exp(2*pi*i/(N+1/2)), a primitive (2N+1)-th root
// of t^2.  All integer and half-integer powers of t are powers of
// omega = exp(2*pi*i/r) with r = 2N+1, so they reduce exactly mod r.
struct RootData {
    int N = 1;
    int r = 3;                // 2N+1, odd
    double half_level = 1.5;  // N + 1/2
    cplx t;

    // Throws std::invalid_argument unless N >= 1 (resp. r odd and >= 3).
    static RootData from_order(int N);
    static RootData from_level(int r);
};

}  // namespace wclab
