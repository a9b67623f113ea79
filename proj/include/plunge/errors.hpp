#pragma once

#include <stdexcept>
#include <string>

namespace plunge {

/// Bad input: out-of-domain arguments, mismatched dimensions, malformed files.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine failed to deliver its contract (non-frame window,
/// eigensolver did not converge, residual above tolerance).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plunge
