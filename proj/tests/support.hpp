#pragma once

#include <cstdint>
#include <random>

#include "tvdlab/dg.hpp"
#include "tvdlab/grid.hpp"

namespace tvd::testing {

inline CellField random_field(std::size_t n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    CellField f(make_grid(n, {0.0, static_cast<double>(n), 0.0, static_cast<double>(n)}));
    for (auto& x : f.values.flat()) {
        x = dist(rng);
    }
    return f;
}

inline DGState random_state(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DGState s(make_grid(n, {-1.0, 1.0, -1.0, 1.0}));
    for (auto& m : s.coeffs.flat()) {
        m = {dist(rng), dist(rng), dist(rng), dist(rng)};
    }
    return s;
}

inline CellField scaled(const CellField& f, double c) {
    CellField out = f;
    for (auto& x : out.values.flat()) {
        x *= c;
    }
    return out;
}

inline CellField sum(const CellField& a, const CellField& b) {
    CellField out = a;
    const auto bv = b.values.flat();
    auto ov = out.values.flat();
    for (std::size_t k = 0; k < ov.size(); ++k) {
        ov[k] += bv[k];
    }
    return out;
}

}  // namespace tvd::testing
