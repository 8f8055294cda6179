#pragma once

#include <vector>

namespace orbsmooth {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]. Nodes ascending.
// Throws std::invalid_argument for n < 1.
QuadratureRule gauss_legendre(int n);

}  // namespace orbsmooth
