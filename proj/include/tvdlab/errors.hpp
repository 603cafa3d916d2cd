#pragma once

#include <stdexcept>
#include <string>

namespace tvd {

/// Grid or field geometry does not satisfy the square-cell contract.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bad user input: CLI arguments, configuration files, field files.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solver produced a non-finite value.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tvd
