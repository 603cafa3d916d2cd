#include "tvdlab/shape.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "tvdlab/errors.hpp"

namespace tvd {

namespace {

constexpr std::array<std::pair<ShapeKind, std::string_view>, 7> kShapeNames{{
    {ShapeKind::gaussian, "gaussian"},
    {ShapeKind::square_pulse, "square_pulse"},
    {ShapeKind::rotated_square_pulse, "rotated_square_pulse"},
    {ShapeKind::cosine_hill, "cosine_hill"},
    {ShapeKind::elliptic_hill, "elliptic_hill"},
    {ShapeKind::burgers_hill, "burgers_hill"},
    {ShapeKind::constant, "constant"},
}};

// Hill profile on the unit "radius" s = r / R: cos(pi s / 2), so that
// R = 0.25 gives cos(2 pi r).
double hill_profile(double s) {
    return s <= 1.0 ? std::cos(0.5 * std::numbers::pi * s) : 0.0;
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
    for (const auto& [k, name] : kShapeNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

ShapeKind parse_shape_kind(std::string_view name) {
    for (const auto& [k, n] : kShapeNames) {
        if (n == name) {
            return k;
        }
    }
    throw ConfigError("unknown shape kind '" + std::string(name) + "'");
}

ShapeSpec ShapeSpec::gaussian(double width) {
    return {.kind = ShapeKind::gaussian, .radius = width};
}

ShapeSpec ShapeSpec::square_pulse(double half_width) {
    return {.kind = ShapeKind::square_pulse, .radius = half_width};
}

ShapeSpec ShapeSpec::rotated_square_pulse(double half_width, double theta) {
    return {.kind = ShapeKind::rotated_square_pulse, .radius = half_width, .theta = theta};
}

ShapeSpec ShapeSpec::cosine_hill() {
    return {.kind = ShapeKind::cosine_hill, .cx = 0.25, .cy = 0.25, .radius = 0.25};
}

ShapeSpec ShapeSpec::elliptic_hill() {
    return {.kind = ShapeKind::elliptic_hill, .radius = 0.25};
}

ShapeSpec ShapeSpec::burgers_hill() {
    return {.kind = ShapeKind::burgers_hill, .cx = -0.5, .cy = -0.5, .radius = 0.25};
}

ShapeSpec ShapeSpec::constant(double c) {
    return {.kind = ShapeKind::constant, .value = c};
}

ShapeSpec ShapeSpec::rotated(double angle) const {
    ShapeSpec out = *this;
    out.theta += angle;
    return out;
}

void ShapeSpec::validate() const {
    const bool finite = std::isfinite(cx) && std::isfinite(cy) && std::isfinite(radius) &&
                        std::isfinite(theta) && std::isfinite(value);
    if (!finite) {
        throw ConfigError("shape parameters must be finite");
    }
    if (kind != ShapeKind::constant && !(radius > 0.0)) {
        throw ConfigError("shape '" + std::string(to_string(kind)) + "' needs a positive radius");
    }
}

double evaluate_shape(const ShapeSpec& spec, double x, double y) {
    // Pull the evaluation point back through the rotation.
    double xr = x;
    double yr = y;
    if (spec.theta != 0.0) {
        const double c = std::cos(spec.theta);
        const double s = std::sin(spec.theta);
        xr = x * c + y * s;
        yr = -x * s + y * c;
    }
    const double px = xr - spec.cx;
    const double py = yr - spec.cy;

    switch (spec.kind) {
        case ShapeKind::gaussian:
            return std::exp(-(px * px + py * py) / (spec.radius * spec.radius));
        case ShapeKind::square_pulse:
        case ShapeKind::rotated_square_pulse:
            return (std::abs(px) <= spec.radius && std::abs(py) <= spec.radius) ? 1.0 : 0.0;
        case ShapeKind::cosine_hill:
        case ShapeKind::burgers_hill:
            return hill_profile(std::hypot(px, py) / spec.radius);
        case ShapeKind::elliptic_hill:
            return hill_profile((0.5 * px * px + 1.5 * py * py) / spec.radius);
        case ShapeKind::constant:
            return spec.value;
    }
    return 0.0;
}

bool is_discontinuous(const ShapeSpec& spec) {
    return spec.kind == ShapeKind::square_pulse || spec.kind == ShapeKind::rotated_square_pulse;
}

}  // namespace tvd
