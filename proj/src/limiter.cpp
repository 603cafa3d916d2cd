#include "tvdlab/limiter.hpp"

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

namespace tvd {

namespace {

double minmod_span(std::span<const double> args) {
    if (args.empty()) {
        return 0.0;
    }
    const double first = args.front();
    if (first == 0.0) {
        return 0.0;
    }
    double out = first;
    for (double a : args) {
        if (!((first > 0.0 && a > 0.0) || (first < 0.0 && a < 0.0))) {
            return 0.0;
        }
        if (std::abs(a) < std::abs(out)) {
            out = a;
        }
    }
    return out;
}

// Fixed-capacity argument list; absent neighbours are simply not pushed.
struct Args {
    std::array<double, 5> data{};
    std::size_t size = 0;

    void push(double a) { data[size++] = a; }
    double minmod() const { return minmod_span({data.data(), size}); }
};

}  // namespace

double minmod(std::initializer_list<double> args) {
    return minmod_span({args.begin(), args.size()});
}

DGState moment_limit(const DGState& state, double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0)) {
        throw std::invalid_argument("limiter alpha must lie in (0, 1]");
    }
    const std::size_t n = state.n();
    DGState out = state;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Modes& m = state(i, j);
            const bool has_w = i > 0;
            const bool has_e = i + 1 < n;
            const bool has_s = j > 0;
            const bool has_n = j + 1 < n;

            Args mixed;
            mixed.push(m.c11);
            if (has_e) mixed.push(alpha * (state(i + 1, j).c01 - m.c01));
            if (has_w) mixed.push(alpha * (m.c01 - state(i - 1, j).c01));
            if (has_n) mixed.push(alpha * (state(i, j + 1).c10 - m.c10));
            if (has_s) mixed.push(alpha * (m.c10 - state(i, j - 1).c10));
            const double c11 = mixed.size > 1 ? mixed.minmod() : m.c11;
            if (c11 == m.c11) {
                continue;
            }

            Args slope_x;
            slope_x.push(m.c10);
            if (has_e) slope_x.push(alpha * (state(i + 1, j).c00 - m.c00));
            if (has_w) slope_x.push(alpha * (m.c00 - state(i - 1, j).c00));

            Args slope_y;
            slope_y.push(m.c01);
            if (has_n) slope_y.push(alpha * (state(i, j + 1).c00 - m.c00));
            if (has_s) slope_y.push(alpha * (m.c00 - state(i, j - 1).c00));

            Modes& target = out(i, j);
            target.c11 = c11;
            target.c10 = slope_x.size > 1 ? slope_x.minmod() : m.c10;
            target.c01 = slope_y.size > 1 ? slope_y.minmod() : m.c01;
        }
    }
    return out;
}

}  // namespace tvd
