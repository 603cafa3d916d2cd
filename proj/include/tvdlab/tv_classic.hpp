#pragma once

#include <cstddef>

#include "tvdlab/grid.hpp"

namespace tvd {

/// dx * sum |U(i+1,j) - U(i,j)| + |U(i,j+1) - U(i,j)| over in-range forward
/// differences (no wraparound; differences leaving the grid are dropped).
double tv_anisotropic(const CellField& field);

/// dx * sum sqrt(D1^2 + D2^2) with out-of-range forward differences set to zero.
double tv_isotropic(const CellField& field);

/// Closed-form TVs of the exactly projected square pulse of half-width
/// 1/sqrt(2) on [-2, 2]^2 (u) and of the same pulse rotated by pi/4 (v).
struct PulseTvOracles {
    double tva_u;
    double tva_v;
    double tvis_v;
};

/// Requires n divisible by 4 (throws std::invalid_argument otherwise).
///
///   tva_u  = 4 (2 floor(a) + 2 frac(a)) dx,  a = n / (4 sqrt 2)
///   tva_v  = (2n - 4) dx = 8 - 16/n
///   tvis_v = ((3 sqrt 2 + 2) n / 4 - 3 sqrt 2 + 2) dx
/// with dx = 4 / n.
PulseTvOracles square_pulse_tv_oracles(std::size_t n);

}  // namespace tvd
