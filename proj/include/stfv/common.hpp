#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stfv {

using Vec = std::vector<double>;

/// Dense row-major matrix of doubles. Deliberately minimal: the numeric
/// kernels in this project accumulate in explicit loops so that summation
/// order is fixed by code, not by a BLAS backend.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    std::span<double> row_span(std::size_t i) { return {row(i), cols}; }
    std::span<const double> row_span(std::size_t i) const { return {row(i), cols}; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Malformed or inconsistent data: bad magic, truncated file, out-of-bounds
/// descriptor, mismatched model dimensions. CLI exit code 2.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid request: bad flag combination, unsatisfiable protocol. CLI exit code 1.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown (non-finite likelihood or objective). CLI exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace stfv
