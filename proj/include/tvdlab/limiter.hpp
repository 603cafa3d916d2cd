#pragma once

#include <initializer_list>

#include "tvdlab/dg.hpp"

namespace tvd {

/// Zero unless all arguments share a sign; then the one of least magnitude.
double minmod(std::initializer_list<double> args);

/// Hierarchical moment limiter for the Q1 modal basis.
///
/// c11 is limited first against alpha-scaled differences of the neighbours'
/// c10 (in y) and c01 (in x). Only when c11 changed are c10 and c01 limited
/// against alpha-scaled differences of neighbouring cell means. c00 is never
/// modified. At the boundary the missing neighbour's difference is dropped.
/// Throws std::invalid_argument unless 0 < alpha <= 1.
DGState moment_limit(const DGState& state, double alpha = 0.5);

}  // namespace tvd
