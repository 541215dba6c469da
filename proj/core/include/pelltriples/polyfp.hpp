#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pelltriples/intkernel.hpp"

namespace pelltriples {

// Dense polynomial over F_p. Coefficients are stored lowest degree first,
// reduced into [0, p), with no trailing zeros.
struct PolyFp {
    Int p;
    std::vector<Int> coeffs;

    PolyFp(Int modulus, std::vector<Int> c);

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Number of distinct roots of f in F_p, as deg gcd(x^p - x, f).
int count_distinct_roots(const PolyFp& f);

// Whether x^8 - 2a x^4 + 1 has eight distinct roots modulo p.
bool splits_completely(const Int& a, const Int& p);

struct RationalFactorization {
    bool reducible = false;
    // Non-negative integer with t^2 = 2(a-1), present iff reducible.
    std::optional<Int> t;
    // x^4 - t x^2 - 1 and x^4 + t x^2 - 1, lowest degree first.
    std::optional<std::pair<std::vector<Int>, std::vector<Int>>> factors;
};

// Reducibility of x^8 - 2a x^4 + 1 over the rationals, with the explicit
// degree-4 factors when reducible.
RationalFactorization rational_factorization(const Int& a);

}  // namespace pelltriples
