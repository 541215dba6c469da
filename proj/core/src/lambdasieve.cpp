#include "pelltriples/lambdasieve.hpp"

#include <exception>
#include <stdexcept>
#include <thread>

#include "pelltriples/classgroup.hpp"
#include "pelltriples/errors.hpp"
#include "pelltriples/pell.hpp"
#include "pelltriples/polyfp.hpp"

namespace pelltriples {

namespace {

void check_odd_prime(const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime");
}

LambdaVerdict verdict_for(const GroupContext& ctx, const Int& p) {
    LambdaVerdict v;
    v.p = p;
    v.legendre_m = jacobi(ctx.m(), p) == 1;
    v.legendre_neg_m = jacobi(-ctx.m(), p) == 1;
    if (v.legendre_m && v.legendre_neg_m) {
        RankResult rank = lucas_rank(ctx.fundamental().a, p);
        v.rank_odd = mpz_odd_p(rank.rho.get_mpz_t());
        v.in_lambda = v.rank_odd;
    }
    return v;
}

void sieve_range(const GroupContext& ctx, const Int& lo, const Int& hi,
                 std::vector<LambdaVerdict>& out) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), Int(lo - 1).get_mpz_t());
    for (; p <= hi; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (p == 2 || ctx.m() % p == 0) continue;
        LambdaVerdict v = verdict_for(ctx, p);
        if (v.in_lambda) out.push_back(std::move(v));
    }
}

}  // namespace

LambdaVerdict in_lambda(const GroupContext& ctx, const Int& p) {
    check_odd_prime(p);
    if (ctx.m() % p == 0) throw std::invalid_argument("p must not divide m");
    LambdaVerdict v = verdict_for(ctx, p);
    // Report the rank honestly even when a Legendre flag already failed.
    if (!v.legendre_m || !v.legendre_neg_m) {
        RankResult rank = lucas_rank(ctx.fundamental().a, p);
        v.rank_odd = mpz_odd_p(rank.rho.get_mpz_t());
    }
    return v;
}

std::vector<LambdaVerdict> lambda_primes(const GroupContext& ctx, const Int& bound,
                                         unsigned jobs) {
    if (bound < 3) throw std::invalid_argument("bound must be at least 3");
    if (jobs == 0) jobs = 1;

    std::vector<LambdaVerdict> out;
    if (jobs == 1 || bound < 64) {
        sieve_range(ctx, Int(3), bound, out);
        return out;
    }

    Int span = (bound - 3) / jobs + 1;
    std::vector<std::vector<LambdaVerdict>> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) {
        Int lo = 3 + span * i;
        Int hi = i + 1 == jobs ? bound : Int(lo + span - 1);
        if (hi > bound) hi = bound;
        workers.emplace_back([&ctx, lo, hi, &parts, &errors, i] {
            try {
                sieve_range(ctx, lo, hi, parts[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& part : parts)
        for (auto& v : part) out.push_back(std::move(v));
    return out;
}

bool splitting_criterion(const GroupContext& ctx, const Int& p) {
    check_odd_prime(p);
    const Int& a = ctx.fundamental().a;
    if (p <= a * a) return false;
    if (p % 16 == 1) return false;
    return splits_completely(a, p);
}

PrimeWitnessTriple triple_from_prime(const GroupContext& ctx, const Int& p) {
    check_odd_prime(p);
    const Int& m = ctx.m();
    if (jacobi(m, p) != 1 || jacobi(-m, p) != 1)
        throw NotEligible("p fails the Legendre conditions for m");

    Int h = class_number(m);
    Int pk = 1;
    for (Int k = 1; k <= h; ++k) {
        pk *= p;
        for (int delta = 0; delta <= 1; ++delta) {
            Int z = delta ? Int(2 * pk) : pk;
            Int z2 = z * z;
            for (Int y = 1, cap = isqrt(z2 / m); y <= cap; ++y) {
                auto x = is_perfect_square(z2 - m * y * y);
                if (!x || gcd(*x, y) != 1) continue;
                PrimeWitnessTriple witness;
                witness.p = p;
                witness.triple = normalize(ctx, *x, y, z);
                witness.k = k;
                witness.delta = delta;
                if (mpz_even_p(Int(*x - y).get_mpz_t()))
                    witness.representation = std::make_pair(Int((*x - y) / 2), y);
                return witness;
            }
        }
    }
    throw ContractViolation("no witness with exponent up to the class number");
}

}  // namespace pelltriples
