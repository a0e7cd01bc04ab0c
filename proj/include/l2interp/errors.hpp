#pragma once

#include <stdexcept>
#include <string>

namespace l2i {

// File and stream problems (missing file, malformed image, truncated payload).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failures (quadrature non-convergence, degenerate transforms).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace l2i
