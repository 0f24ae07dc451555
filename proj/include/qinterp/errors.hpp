#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qinterp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something out of contract (bad qubit index, size, flag).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Register layout is not a permutation of 0..Q-1, or registers overlap.
class LayoutError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class EncodingError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class ParseError : public ArgumentError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : ArgumentError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Base for failures of a numerical invariant (exit code 4 in the CLI).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Qubits scheduled for removal still carry population.
class EntanglementError : public NumericalError {
public:
    EntanglementError(const std::string& what, double residual)
        : NumericalError(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Inverse cosine transform applied to a state outside the transform's range.
class RangeError : public NumericalError {
public:
    RangeError(const std::string& what, double residual)
        : NumericalError(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class DegenerateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class InvariantError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ResourceError : public Error {
public:
    ResourceError(const std::string& what, double required_bytes)
        : Error(what), required_bytes_(required_bytes) {}

    double required_bytes() const noexcept { return required_bytes_; }

private:
    double required_bytes_;
};

}  // namespace qinterp
