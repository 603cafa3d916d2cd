#pragma once

#include <vector>

namespace tvd {

/// Gauss-Legendre rule on [-1, 1]; weights sum to 2.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes in ascending order. Exact for polynomials of degree 2 * order - 1.
const GaussRule& gauss_legendre(int order);

}  // namespace tvd
