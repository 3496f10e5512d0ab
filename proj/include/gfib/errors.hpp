#pragma once

#include <stdexcept>
#include <string>

namespace gfib {

/// Malformed user input (bad decimal string, unknown name, bad range syntax).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the mathematical domain of an operation (m = 0, s <= 1, gcd(0,0)).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A configured resource ceiling (term count, time budget) was hit.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfib
