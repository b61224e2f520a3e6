#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lidstone {

/// Invalid user-supplied parameter. `field()` names the offending input.
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Operand sizes (or meshes) that do not belong together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Zero or near-zero pivot met during elimination.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(std::size_t row)
        : std::runtime_error("near-zero pivot at row " + std::to_string(row)), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// A computed result violated a post-condition (e.g. residual bound).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not enough records to fit a timing model.
class InsufficientDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lidstone
