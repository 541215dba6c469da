#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pelltriples/intkernel.hpp"
#include "pelltriples/triplegroup.hpp"

namespace pelltriples {

struct LambdaVerdict {
    Int p;
    bool in_lambda = false;
    bool legendre_m = false;
    bool legendre_neg_m = false;
    bool rank_odd = false;
};

// Membership of p in Lambda_m by the definition: (m/p) = (-m/p) = 1 and the
// rank of apparition of p in the Pell recurrence is odd.
LambdaVerdict in_lambda(const GroupContext& ctx, const Int& p);

// Ascending members of Lambda_m up to bound. With jobs > 1 the range is
// partitioned across threads; the merged result is identical to the
// sequential one.
std::vector<LambdaVerdict> lambda_primes(const GroupContext& ctx, const Int& bound,
                                         unsigned jobs = 1);

// Sufficient criterion: p > a^2, p != 1 (mod 16), and x^8 - 2a x^4 + 1
// splits completely mod p. Implies membership; the converse can fail.
bool splitting_criterion(const GroupContext& ctx, const Int& p);

struct PrimeWitnessTriple {
    Int p;
    PrimitiveTriple triple;
    Int k = 1;
    int delta = 0;
    std::optional<std::pair<Int, Int>> representation;
};

// Witness triple [x, y, z] with z = 2^delta * p^k, minimal k then delta.
// Requires (m/p) = (-m/p) = 1; k never exceeds the class number.
PrimeWitnessTriple triple_from_prime(const GroupContext& ctx, const Int& p);

}  // namespace pelltriples
