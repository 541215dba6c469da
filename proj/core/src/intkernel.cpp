#include "pelltriples/intkernel.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace pelltriples {

int jacobi(const Int& a, const Int& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Int isqrt(const Int& n) {
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    return isqrt(n);
}

namespace {

// Strong-pseudoprime test to base b; n odd, n > 3.
bool strong_probable_prime(const Int& n, unsigned long b) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x;
    mpz_powm(x.get_mpz_t(), Int(b).get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

// First twelve primes: deterministic witnesses below ~3.3e24.
constexpr unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const Int& mr_deterministic_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (unsigned long b : kMrBases) {
        if (n == b)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return false;
    }
    if (n >= mr_deterministic_bound())
        return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
    for (unsigned long b : kMrBases)
        if (!strong_probable_prime(n, b))
            return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;

    explicit Deadline(const FactorConfig& config) {
        if (config.timeout_ms > 0)
            at = Clock::now() + std::chrono::milliseconds(config.timeout_ms);
    }
    bool expired() const { return at && Clock::now() > *at; }
};

// Brent-cycle Pollard rho with x -> x^2 + c; returns a nontrivial factor of
// composite odd n, or 0 when this parameter choice fails.
Int rho_brent(const Int& n, unsigned long c, const Deadline& deadline) {
    Int y = 2 + c % 5, x, ys, q = 1, g = 1;
    const unsigned long batch = 128;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = (y * y + c) % n;
        for (unsigned long k = 0; k < r && g == 1; k += batch) {
            if (deadline.expired())
                throw FactorTimeout("factor: deadline expired (rho)");
            ys = y;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the saved point.
        do {
            ys = (ys * ys + c) % n;
            mpz_gcd(g.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out, const Deadline& deadline) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = 0;
    for (unsigned long c = 1; d == 0; ++c) {
        if (deadline.expired())
            throw FactorTimeout("factor: deadline expired");
        d = rho_brent(n, c, deadline);
    }
    factor_into(d, out, deadline);
    factor_into(n / d, out, deadline);
}

} // namespace

Factorization factor(const Int& n, const FactorConfig& config) {
    if (n < 1)
        throw std::invalid_argument("factor: argument must be >= 1");
    Deadline deadline(config);
    std::map<Int, unsigned> found;
    Int rest = n;
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > rest)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[p];
            rest /= p;
        }
    }
    if (rest > 1) {
        if (Int(10000) * 10000 > rest) // below the trial bound squared: prime
            ++found[rest];
        else
            factor_into(rest, found, deadline);
    }

    Factorization result;
    result.value = n;
    Int check = 1;
    for (const auto& [p, e] : found) {
        if (!is_prime(p))
            throw ContractViolation("factor: non-prime factor escaped");
        for (unsigned i = 0; i < e; ++i)
            check *= p;
        result.factors.emplace_back(p, e);
    }
    if (check != n)
        throw ContractViolation("factor: product of prime powers != input");
    return result;
}

SquarefreeSplit squarefree_part(const Int& n, const FactorConfig& config) {
    if (n < 1)
        throw std::invalid_argument("squarefree_part: argument must be >= 1");
    Factorization f = factor(n, config);
    SquarefreeSplit split{1, 1};
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1)
            split.squarefree *= p;
        for (unsigned i = 0; i < e / 2; ++i)
            split.root *= p;
    }
    return split;
}

} // namespace pelltriples
