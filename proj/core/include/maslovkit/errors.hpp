#pragma once

#include <stdexcept>
#include <string>

namespace maslovkit {

/// Violated contract on inputs (dimension mismatch, non-symplectic matrix,
/// transversality failure, ...). CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric verdict that could not be reached at the requested resolution
/// (unclean spectral gap, unresolved degenerate crossing). CLI exit code 3.
class InconclusiveError : public std::runtime_error {
public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace maslovkit
