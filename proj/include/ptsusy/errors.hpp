#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptsusy {

/// Fixed-step integration produced a non-finite state.
class integration_overflow : public std::runtime_error {
public:
    integration_overflow(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A bracket handed to a root finder contains neither a sign change nor an
/// interior minimum.
class bracket_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Potentials are not evaluated in this Weierstrass regime (D < 0).
class unsupported_regime : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace ptsusy
