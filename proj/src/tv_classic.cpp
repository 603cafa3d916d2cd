#include "tvdlab/tv_classic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tvdlab/summation.hpp"

namespace tvd {

double tv_anisotropic(const CellField& field) {
    const std::size_t n = field.n();
    CompensatedSum sum;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i + 1 < n) {
                sum.add(std::abs(field(i + 1, j) - field(i, j)));
            }
            if (j + 1 < n) {
                sum.add(std::abs(field(i, j + 1) - field(i, j)));
            }
        }
    }
    return field.grid.dx() * sum.value();
}

double tv_isotropic(const CellField& field) {
    const std::size_t n = field.n();
    CompensatedSum sum;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d1 = i + 1 < n ? field(i + 1, j) - field(i, j) : 0.0;
            const double d2 = j + 1 < n ? field(i, j + 1) - field(i, j) : 0.0;
            sum.add(std::hypot(d1, d2));
        }
    }
    return field.grid.dx() * sum.value();
}

PulseTvOracles square_pulse_tv_oracles(std::size_t n) {
    if (n == 0 || n % 4 != 0) {
        throw std::invalid_argument("pulse TV oracles need n divisible by 4");
    }
    const double nd = static_cast<double>(n);
    const double dx = 4.0 / nd;
    const double sqrt2 = std::numbers::sqrt2;
    const double a = nd / (4.0 * sqrt2);
    const double whole = std::floor(a);
    return {
        .tva_u = 4.0 * (2.0 * whole + 2.0 * (a - whole)) * dx,
        .tva_v = (2.0 * nd - 4.0) * dx,
        .tvis_v = ((3.0 * sqrt2 + 2.0) * nd / 4.0 - 3.0 * sqrt2 + 2.0) * dx,
    };
}

}  // namespace tvd
