#pragma once

#include <string>
#include <string_view>

namespace tvd {

enum class ShapeKind {
    gaussian,
    square_pulse,
    rotated_square_pulse,
    cosine_hill,
    elliptic_hill,
    burgers_hill,
    constant,
};

std::string_view to_string(ShapeKind kind);
/// Throws ConfigError on an unknown name.
ShapeKind parse_shape_kind(std::string_view name);

/// Analytic initial data / test shapes.
///
/// Every shape may be rotated counterclockwise about the origin by `theta`:
/// the rotated shape is evaluated as u(x cos t + y sin t, -x sin t + y cos t).
/// `rotated_square_pulse` is a square pulse whose factory default is t = pi/4.
struct ShapeSpec {
    ShapeKind kind = ShapeKind::constant;
    double cx = 0.0;
    double cy = 0.0;
    /// Gaussian width, pulse half-width, or hill radius.
    double radius = 0.0;
    double theta = 0.0;
    double value = 0.0;

    /// exp(-(x^2 + y^2) / 0.15^2).
    static ShapeSpec gaussian(double width = 0.15);
    /// Indicator of [-h, h]^2; default h = 1/sqrt(2).
    static ShapeSpec square_pulse(double half_width = 0.70710678118654752440);
    /// The square pulse rotated counterclockwise by theta (default pi/4).
    static ShapeSpec rotated_square_pulse(double half_width = 0.70710678118654752440,
                                          double theta = 0.78539816339744830962);
    /// cos(2 pi r) for r = |(x, y) - (0.25, 0.25)| <= 0.25, zero outside.
    static ShapeSpec cosine_hill();
    /// cos(2 pi q) for q = 0.5 x^2 + 1.5 y^2 <= 0.25, zero outside.
    static ShapeSpec elliptic_hill();
    /// The cosine hill centred at (-0.5, -0.5).
    static ShapeSpec burgers_hill();
    static ShapeSpec constant(double c);

    /// Same shape rotated counterclockwise by a further `angle`.
    ShapeSpec rotated(double angle) const;

    /// Throws ConfigError when a parameter required by `kind` is missing or invalid.
    void validate() const;
};

double evaluate_shape(const ShapeSpec& spec, double x, double y);

/// True for shapes with jump discontinuities (square pulses).
bool is_discontinuous(const ShapeSpec& spec);

}  // namespace tvd
