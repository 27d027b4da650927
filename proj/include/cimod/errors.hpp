#pragma once

#include <stdexcept>
#include <string>

namespace cimod {

// Malformed or out-of-range input (bad degree, negative argument, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input lies outside the domain where the moduli formula is asserted
// (K3 surfaces, quadric hypersurfaces).
class DomainExclusion : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::string size)
        : std::runtime_error(what), size_(std::move(size)) {}

    // Decimal string of the enumeration size that was refused.
    const std::string& size() const noexcept { return size_; }

private:
    std::string size_;
};

} // namespace cimod
