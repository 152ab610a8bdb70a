#pragma once

#include <stdexcept>
#include <string>

namespace bnhilb {

// Input violated a documented precondition (bad type vector, composite
// modulus, dimension mismatch, ...).  CLI maps this to a usage error.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A claim the library is supposed to certify failed to hold.  Carries a
// stable claim identifier so diagnostics can name the violated fact.
struct invariant_violation : std::runtime_error {
    std::string claim;
    invariant_violation(std::string claim_id, const std::string& detail)
        : std::runtime_error(claim_id + ": " + detail), claim(std::move(claim_id)) {}
};

// Truncation cap is too small for the requested computation.
struct cap_too_small : domain_error {
    explicit cap_too_small(const std::string& what) : domain_error(what) {}
};

// Colength sequence did not stabilize below the cap (ideal not of finite
// colength, or cap chosen too small).
struct non_stabilized : domain_error {
    explicit non_stabilized(const std::string& what) : domain_error(what) {}
};

// An enumeration would exceed the configured work budget.
struct budget_exceeded : domain_error {
    explicit budget_exceeded(const std::string& what) : domain_error(what) {}
};

}  // namespace bnhilb
