// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace sgbs {

/// Invalid configuration: bad dimensions, mismatched bases, missing inputs.
/// Mapped to process exit code 2 by the CLI.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical rejection: non-parabolic system, unstable scheme, blow-up.
/// Mapped to process exit code 3 by the CLI.
class NumericalRejection : public std::runtime_error {
public:
    explicit NumericalRejection(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input data: malformed CSV, degenerate samples, prices outside
/// arbitrage bounds. Mapped to process exit code 4 by the CLI.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sgbs
