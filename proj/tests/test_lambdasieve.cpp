#include "doctest.h"

#include <vector>

#include "pelltriples/classgroup.hpp"
#include "pelltriples/errors.hpp"
#include "pelltriples/lambdasieve.hpp"
#include "pelltriples/pell.hpp"

using namespace pelltriples;

namespace {

std::vector<Int> eligible_primes(const GroupContext& ctx, long bound) {
    std::vector<Int> out;
    Int p = 2;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p >= bound) return out;
        if (ctx.m() % p == 0) continue;
        if (jacobi(ctx.m(), p) == 1 && jacobi(-ctx.m(), p) == 1) out.push_back(p);
    }
}

std::vector<Int> verdict_ps(const std::vector<LambdaVerdict>& vs) {
    std::vector<Int> out;
    for (const auto& v : vs) out.push_back(v.p);
    return out;
}

}  // namespace

TEST_CASE("in_lambda worked verdicts") {
    GroupContext two(2);
    LambdaVerdict v41 = in_lambda(two, 41);
    CHECK(v41.in_lambda);
    CHECK(v41.legendre_m);
    CHECK(v41.legendre_neg_m);
    CHECK(v41.rank_odd);

    LambdaVerdict v17 = in_lambda(two, 17);
    CHECK_FALSE(v17.in_lambda);
    CHECK(v17.legendre_m);
    CHECK(v17.legendre_neg_m);
    CHECK_FALSE(v17.rank_odd);

    // 7 fails a Legendre condition, yet the rank field still tells the truth
    LambdaVerdict v7 = in_lambda(two, 7);
    CHECK_FALSE(v7.in_lambda);
    CHECK(v7.legendre_m);
    CHECK_FALSE(v7.legendre_neg_m);
    CHECK(v7.rank_odd);

    // a = 9801 = 1 (mod 5): degenerate rank rho = 5, odd
    GroupContext twentynine(29);
    CHECK(in_lambda(twentynine, 5).in_lambda);
}

TEST_CASE("in_lambda rejects bad p") {
    GroupContext two(2);
    CHECK_THROWS_AS(in_lambda(two, 2), std::invalid_argument);
    CHECK_THROWS_AS(in_lambda(two, 9), std::invalid_argument);
    CHECK_THROWS_AS(in_lambda(two, 15), std::invalid_argument);
    CHECK_THROWS_AS(in_lambda(two, -7), std::invalid_argument);
    GroupContext five(5);
    CHECK_THROWS_AS(in_lambda(five, 5), std::invalid_argument);
}

TEST_CASE("lambda_primes worked slices") {
    GroupContext two(2);
    auto small = lambda_primes(two, 50);
    REQUIRE(small.size() == 1);
    CHECK(small[0].p == 41);
    CHECK(lambda_primes(two, 10).empty());
    CHECK_THROWS_AS(lambda_primes(two, 2), std::invalid_argument);

    GroupContext five(5);
    auto l5 = lambda_primes(five, 30);
    REQUIRE(l5.size() == 1);
    CHECK(l5[0].p == 29);
}

TEST_CASE("lambda_primes agrees with direct membership") {
    GroupContext five(5);
    auto got = verdict_ps(lambda_primes(five, 300));
    std::vector<Int> expect;
    Int p = 2;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p >= 300) break;
        if (p == 5) continue;
        if (in_lambda(five, p).in_lambda) expect.push_back(p);
    }
    CHECK(got == expect);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] < got[i]);
}

TEST_CASE("lambda_primes is independent of the job count") {
    GroupContext two(2);
    auto sequential = verdict_ps(lambda_primes(two, 2000, 1));
    for (unsigned jobs : {2u, 3u, 7u})
        CHECK(verdict_ps(lambda_primes(two, 2000, jobs)) == sequential);
    CHECK(verdict_ps(lambda_primes(two, 2000, 0)) == sequential);
}

TEST_CASE("splitting_criterion worked values") {
    GroupContext two(2);
    CHECK(splitting_criterion(two, 41));
    CHECK_FALSE(splitting_criterion(two, 17));  // 17 = 1 (mod 16)
    CHECK_FALSE(splitting_criterion(two, 7));   // below a^2 = 9
    CHECK_FALSE(splitting_criterion(two, 73));  // octic does not split
    CHECK_THROWS_AS(splitting_criterion(two, 15), std::invalid_argument);

    // membership without the criterion: 29 sits below a^2 = 81
    GroupContext five(5);
    CHECK_FALSE(splitting_criterion(five, 29));
    CHECK(in_lambda(five, 29).in_lambda);
}

TEST_CASE("splitting_criterion is sound") {
    int positives = 0;
    for (long mv : {2, 5}) {
        GroupContext ctx(mv);
        Int p = 2;
        for (;;) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (p > 3000) break;
            if (ctx.m() % p == 0) continue;
            if (splitting_criterion(ctx, p)) {
                ++positives;
                CHECK(in_lambda(ctx, p).in_lambda);
            }
        }
    }
    CHECK(positives > 0);
}

TEST_CASE("triple_from_prime worked witnesses") {
    GroupContext five(5);
    PrimeWitnessTriple w29 = triple_from_prime(five, 29);
    CHECK(w29.triple == normalize(five, 11, 12, 29));
    CHECK(w29.k == 1);
    CHECK(w29.delta == 0);
    CHECK_FALSE(w29.representation.has_value());

    CHECK(triple_from_prime(five, 41).triple == normalize(five, 31, 12, 41));
    CHECK(triple_from_prime(five, 61).triple == normalize(five, 29, 24, 61));

    GroupContext six(6);
    PrimeWitnessTriple w5 = triple_from_prime(six, 5);
    CHECK(w5.triple == normalize(six, 1, 2, 5));
    CHECK(w5.k == 1);
    CHECK(w5.delta == 0);

    // the ideal class above 5 has order 3, so z climbs to 5^3
    GroupContext twentynine(29);
    PrimeWitnessTriple w125 = triple_from_prime(twentynine, 5);
    CHECK(w125.triple == normalize(twentynine, 107, 12, 125));
    CHECK(w125.k == 3);
    CHECK(w125.delta == 0);

    // no integral generator at z = 5, so the witness doubles z
    GroupContext eleven(11);
    PrimeWitnessTriple w10 = triple_from_prime(eleven, 5);
    CHECK(w10.triple == normalize(eleven, 1, 3, 10));
    CHECK(w10.k == 1);
    CHECK(w10.delta == 1);
    REQUIRE(w10.representation.has_value());
    CHECK(w10.representation->first == -1);
    CHECK(w10.representation->second == 3);

    GroupContext fifteen(15);
    PrimeWitnessTriple w17 = triple_from_prime(fifteen, 17);
    CHECK(w17.triple == normalize(fifteen, 7, 4, 17));
    CHECK(w17.k == 1);
    CHECK(w17.delta == 0);
}

TEST_CASE("triple_from_prime rejects ineligible input") {
    GroupContext five(5);
    CHECK_THROWS_AS(triple_from_prime(five, 3), NotEligible);
    CHECK_THROWS_AS(triple_from_prime(five, 11), NotEligible);
    CHECK_THROWS_AS(triple_from_prime(five, 9), std::invalid_argument);
    CHECK_THROWS_AS(triple_from_prime(five, 2), std::invalid_argument);
}

TEST_CASE("witness invariants over the eligible primes") {
    for (long mv : {5, 6, 11, 15, 29}) {
        GroupContext ctx(mv);
        Int h = class_number(ctx.m());
        for (const Int& p : eligible_primes(ctx, 100)) {
            PrimeWitnessTriple w = triple_from_prime(ctx, p);
            CHECK(w.p == p);
            CHECK(w.k >= 1);
            CHECK(w.k <= h);

            Int zexp;
            mpz_pow_ui(zexp.get_mpz_t(), p.get_mpz_t(), w.k.get_ui());
            if (w.delta == 1) zexp *= 2;
            CHECK(w.triple.z == zexp);
            if (ctx.m() % 4 != 3) CHECK(w.delta == 0);

            Int diff = w.triple.x - w.triple.y;
            CHECK(w.representation.has_value() == (diff % 2 == 0));
            if (w.representation) {
                CHECK(w.representation->first == diff / 2);
                CHECK(w.representation->second == w.triple.y);
            }
        }
    }
}
