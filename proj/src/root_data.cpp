#include "wclab/root_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wclab {

RootData RootData::from_order(int N) {
    if (N < 1) throw std::invalid_argument("RootData: N must be >= 1");
    RootData root;
    root.N = N;
    root.r = 2 * N + 1;
    root.half_level = N + 0.5;
    root.t = std::polar(1.0, 2.0 * std::numbers::pi / root.half_level);
    return root;
}

RootData RootData::from_level(int r) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("RootData: r must be odd and >= 3");
    return from_order((r - 1) / 2);
}

}  // namespace wclab
