#ifndef PELLTRIPLES_ERRORS_HPP
#define PELLTRIPLES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pelltriples {

/// Factorization hit its deadline before finishing. Never raised with a
/// partial or wrong answer; the input was simply too hard for the budget.
struct FactorTimeout : std::runtime_error {
    explicit FactorTimeout(const std::string& what) : std::runtime_error(what) {}
};

/// The requested construction needs a hypothesis the input does not satisfy
/// (e.g. a witness triple for a prime with the wrong Legendre symbols).
struct NotEligible : std::runtime_error {
    explicit NotEligible(const std::string& what) : std::runtime_error(what) {}
};

/// An order-two certificate was requested for a triple whose ideal class is
/// principal; the coset may well lie in the Pell subgroup.
struct CertificateRefused : std::runtime_error {
    explicit CertificateRefused(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that must hold by construction failed; indicates a
/// caller contract breach or a bug, not bad user input.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace pelltriples

#endif
