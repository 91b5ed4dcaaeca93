#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hdconc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value or dataset violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Vector or matrix shapes do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A scalar parameter is outside its admissible domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Fewer samples than the operation needs.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Input is well formed but degenerate (zero-norm vector, zero spectrum).
/// Carries the offending sample/row index when there is one.
class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : Error(what), index_(index) {}

    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    std::optional<std::size_t> index_;
};

/// An iterative algorithm failed to converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// A file was readable but its contents do not parse.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace hdconc
