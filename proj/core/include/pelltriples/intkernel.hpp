#ifndef PELLTRIPLES_INTKERNEL_HPP
#define PELLTRIPLES_INTKERNEL_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "pelltriples/errors.hpp"

namespace pelltriples {

/// All integer quantities in the library are exact arbitrary-precision values.
using Int = mpz_class;

/// Jacobi symbol (a/n) for odd n >= 1. Equals the Legendre symbol when n is
/// prime. Throws std::invalid_argument for even or nonpositive n.
int jacobi(const Int& a, const Int& n);

/// Floor of the square root of n >= 0.
Int isqrt(const Int& n);

/// The root r with n = r*r, if one exists. Negative n never has one.
std::optional<Int> is_perfect_square(const Int& n);

/// Deterministic primality for everything this library produces at desk
/// scale: Miller-Rabin with the twelve smallest prime bases, proven correct
/// below 3.3e24. Larger inputs fall back to GMP's probable-prime test.
bool is_prime(const Int& n);

/// Budget knobs for the factorizer. timeout_ms == 0 means no deadline.
struct FactorConfig {
    long timeout_ms = 0;
};

/// Prime factorization, pairs (prime, exponent) ascending by prime.
struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;
};

/// Factor n >= 1 by trial division up to 10^4 followed by Brent-cycle
/// Pollard rho (restarted with fresh parameters on failure). Every reported
/// prime passes is_prime; the product of prime powers is re-checked against
/// n. Throws FactorTimeout when the configured deadline expires.
Factorization factor(const Int& n, const FactorConfig& config = {});

/// n = squarefree * root^2 with squarefree squarefree.
struct SquarefreeSplit {
    Int squarefree;
    Int root;
};

/// Squarefree decomposition of n >= 1 via factor().
SquarefreeSplit squarefree_part(const Int& n, const FactorConfig& config = {});

} // namespace pelltriples

#endif
