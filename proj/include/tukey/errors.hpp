#pragma once

#include <stdexcept>
#include <string>

namespace tukey {

// Bad input: malformed arguments, out-of-range parameters, wrong shapes.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A parameter combination that is well-formed but not implemented.
class UnsupportedParameter : public ValidationError {
public:
    explicit UnsupportedParameter(const std::string& what) : ValidationError(what) {}
};

// Quadrature non-convergence and other failures of a numerical scheme.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tukey
