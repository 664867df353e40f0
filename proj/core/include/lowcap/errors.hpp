#pragma once

#include <stdexcept>
#include <string>

namespace lowcap {

// Thrown when an input violates a documented precondition (maps to CLI exit 2).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a numerical procedure cannot proceed, e.g. a bracketing
// bisection finds no sign change (maps to CLI exit 3).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lowcap
