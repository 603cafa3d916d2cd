#include "tvdlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace tvd {

namespace {

GaussRule build_rule(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    // Newton iteration on P_order from the Chebyshev-like initial guess.
    for (int k = 0; k < order; ++k) {
        double x = -std::cos(std::numbers::pi * (k + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int m = 2; m <= order; ++m) {
                const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) {
                break;
            }
        }
        rule.nodes[k] = x;
        rule.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 1 || order > 32) {
        throw std::invalid_argument("Gauss-Legendre order must be in [1, 32]");
    }
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, build_rule(order)).first;
    }
    return it->second;
}

}  // namespace tvd
