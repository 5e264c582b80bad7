#ifndef DXL_ERRORS_HPP
#define DXL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dxl {

// Argument outside the domain of the requested quantity (bad order, r <= 0, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative scheme ran out of budget before meeting its tolerance.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// An oscillatory integral has no value in the ordinary sense (conditionally
// divergent integrand, e.g. a density matrix that does not fall off).
class OscillatoryIntegral : public std::runtime_error {
public:
    explicit OscillatoryIntegral(const std::string& what) : std::runtime_error(what) {}
};

// Root finder was asked to bisect an interval whose endpoints do not bracket
// a sign change.
class RootNotBracketed : public std::runtime_error {
public:
    explicit RootNotBracketed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dxl

#endif
