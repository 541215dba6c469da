#ifndef PELLTRIPLES_PELL_HPP
#define PELLTRIPLES_PELL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pelltriples/intkernel.hpp"

namespace pelltriples {

/// Periodic simple continued fraction of sqrt(m): u0 followed by the
/// shortest period u_1..u_r. The last period element is always 2*u0.
struct CFExpansion {
    Int m;
    Int u0;
    std::vector<Int> period;

    std::size_t period_length() const { return period.size(); }
    /// Partial quotient u_i (i = 0 gives u0, afterwards the period cycles).
    const Int& quotient(std::size_t i) const {
        return i == 0 ? u0 : period[(i - 1) % period.size()];
    }
};

/// Shortest-period expansion via the integer (P,Q) recurrence. m must be
/// >= 2 and not a perfect square.
CFExpansion cf_sqrt(const Int& m);

/// Convergent h_i / k_i, always in lowest terms.
struct Convergent {
    std::size_t i = 0;
    Int h;
    Int k;
};

/// Streams convergents one at a time; values grow without bound, so nothing
/// is precomputed.
class ConvergentStream {
public:
    explicit ConvergentStream(CFExpansion cf) : cf_(std::move(cf)) {}
    Convergent next();

private:
    CFExpansion cf_;
    std::size_t i_ = 0;
    Int h1_ = 1, h2_ = 0; // h_{i-1}, h_{i-2}
    Int k1_ = 0, k2_ = 1;
};

/// First `count` convergents of the expansion.
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count);

/// Least positive solution (a,b) of a^2 - m b^2 = 1, plus the least solution
/// of the -1 equation when the period length is odd (and only then).
struct PellFundamental {
    Int m;
    Int a;
    Int b;
    std::optional<std::pair<Int, Int>> negative;
};

PellFundamental least_pell(const Int& m);

/// (a_n, b_n) with a_n + b_n sqrt(m) = (a_1 + b_1 sqrt(m))^n, n >= 1.
std::pair<Int, Int> pell_power(const PellFundamental& fundamental, unsigned long n);
std::pair<Int, Int> pell_power(const Int& m, unsigned long n);

/// Values of the linear recurrence A_{n+1} = 2a A_n - A_{n-1} with seeds
/// F_0=0, F_1=1 and G_0=2, G_1=2a, optionally reduced mod an odd prime.
struct LucasPair {
    unsigned long n = 0;
    Int F;
    Int G;
    std::optional<Int> modulus;
};

/// Fast doubling through powers of the companion matrix (2a -1; 1 0);
/// O(log n) matrix squarings, which keeps modular queries cheap.
LucasPair lucas_pair(const Int& a, unsigned long n, const std::optional<Int>& modulus = {});

/// Least n > 0 with p | F_n, plus what its parity says about the a_n.
struct RankResult {
    Int p;
    Int rho;
    bool divides_some_a_n; // true iff rho is even
    bool degenerate;       // p | a^2 - 1: the characteristic root is double
};

/// Rank of the odd prime p in the F sequence for parameter a >= 2, found by
/// stepping the recurrence mod p. In the non-degenerate case rho divides
/// p - (a^2-1 | p), which bounds the search by p + 1; this divisibility is
/// asserted, not assumed. When p | a^2 - 1 the sequence degenerates to
/// F_n = n a^{n-1} mod p, so rho = p, flagged degenerate.
RankResult lucas_rank(const Int& a, const Int& p);

} // namespace pelltriples

#endif
