#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tvdlab/grid.hpp"

namespace tvd {

/// Plain-text cell field:
///   # n=<n> xmin=<..> xmax=<..> ymin=<..> ymax=<..>
///   i,j,value            (n*n lines, 1-based, i-major, 17 significant digits)
void write_field(std::ostream& out, const CellField& field);
void write_field(const std::filesystem::path& path, const CellField& field);

/// Throws ConfigError on malformed input, missing or duplicate cells.
CellField read_field(std::istream& in);
CellField read_field(const std::filesystem::path& path);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace tvd
