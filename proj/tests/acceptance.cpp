// Acceptance gate: eleven numbered criteria, one PASS/FAIL line each.
// Exit status is 0 only when every criterion passes. Budgets and seeds are
// fixed here so runs are comparable across machines.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "pelltriples/classgroup.hpp"
#include "pelltriples/lambdasieve.hpp"
#include "pelltriples/pell.hpp"
#include "pelltriples/polyfp.hpp"
#include "pelltriples/scan.hpp"
#include "pelltriples/triplegroup.hpp"

using namespace pelltriples;

namespace {

constexpr double kBudgetScan = 10.0;      // criterion 1
constexpr double kBudgetWorked = 1.0;     // criterion 2
constexpr double kBudgetKernel = 60.0;    // criterion 4
constexpr double kBudgetSieve = 30.0;     // criterion 8

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        if (ok) {
            ok = false;
            note = why;
        }
    }
};

std::string s(long v) { return std::to_string(v); }

// Sample pool: identity, two Pell generators, witnesses over the first
// three split primes (classes off the Pell line), and a couple of sums.
std::vector<PrimitiveTriple> build_pool(const GroupContext& ctx) {
    std::vector<PrimitiveTriple> pool;
    pool.push_back(identity_triple());
    pool.push_back(pell_generator(ctx, 1));
    pool.push_back(pell_generator(ctx, 2));
    if (ctx.m() == 3) pool.push_back(normalize(ctx, 1, 1, 2));
    Int p(3);
    for (int found = 0; found < 3 && p < 500;
         mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (ctx.m() % p != 0 && jacobi(ctx.m(), p) == 1 && jacobi(-ctx.m(), p) == 1) {
            pool.push_back(triple_from_prime(ctx, p).triple);
            ++found;
        }
    }
    const std::size_t base = pool.size();
    for (std::size_t i = 1; i + 1 < base; i += 2)
        pool.push_back(add(ctx, pool[i], pool[i + 1]));
    return pool;
}

PrimitiveTriple random_element(const GroupContext& ctx, const std::vector<PrimitiveTriple>& pool,
                               std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    PrimitiveTriple t = scalar_mul(ctx, coeff(rng), pool[pick(rng)]);
    return add(ctx, t, pool[pick(rng)]);
}

Int random_odd_prime_below_10k(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> draw(3, 9998);
    Int p;
    do {
        mpz_nextprime(p.get_mpz_t(), Int(draw(rng)).get_mpz_t());
    } while (p >= 10000);
    return p;
}

// 1. The scan command reproduces the six certified table rows exactly.
Outcome criterion_1() {
    Outcome out;
    struct Row { const char* m; const char* a; const char* b; const char* c; };
    static const Row expected[6] = {
        {"5", "2", "1", "3"},
        {"145", "12", "1", "17"},
        {"985", "408", "13", "577"},
        {"5654885", "2378", "1", "3363"},
        {"192099601", "13860", "1", "19601"},
        {"261029261", "80782", "5", "114243"},
    };

    cli::CommandResult r = cli::run({"scan", "table", "--max-s", "7"});
    if (r.status != cli::Status::ok) {
        out.fail("scan table --max-s 7 failed: " + r.diagnostics);
        return out;
    }
    std::istringstream in(r.payload);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (rows >= 6) {
            out.fail("more than six rows emitted");
            return out;
        }
        auto doc = nlohmann::json::parse(line);
        const Row& want = expected[rows];
        if (doc.at("m") != want.m || doc.at("a") != want.a || doc.at("b") != want.b ||
            doc.at("c") != want.c)
            out.fail("row " + std::to_string(rows + 1) + " mismatch: " + line);
        if (!doc.at("certificate").is_object())
            out.fail("row " + std::to_string(rows + 1) + " has no certificate");
        ++rows;
    }
    if (rows != 6) out.fail("expected six rows, got " + std::to_string(rows));
    if (out.ok) out.note = "scan table --max-s 7 emits exactly the six certified rows";
    return out;
}

// 2. The worked small cases come out exactly as recorded.
Outcome criterion_2() {
    Outcome out;
    GroupContext five(5), six(6), twentynine(29);

    PrimitiveTriple gen = normalize(five, 2, 1, 3);
    QuadForm image = triple_class(five, gen);
    if (!(image == QuadForm{2, 2, 3}) || is_principal(image))
        out.fail("class of [2,1,3] for m=5 is not the non-principal (2,2,3)");
    if (!(add(five, gen, gen) == normalize(five, -1, 4, 9)))
        out.fail("[2,1,3]+[2,1,3] is not [-1,4,9]");

    if (is_principal(triple_class(six, normalize(six, 1, 2, 5))))
        out.fail("class of [1,2,5] for m=6 should be non-principal");

    TorsionCertificate cert = certify_order_two(twentynine, normalize(twentynine, 70, 13, 99));
    if (cert.evidence != Evidence::representation_failure)
        out.fail(std::string("m=29 certificate evidence is ") + evidence_name(cert.evidence));

    if (out.ok) out.note = "worked cases for m=5, m=6 and m=29 all reproduce";
    return out;
}

// 3. The class map is a homomorphism and its image is 2-torsion.
Outcome criterion_3() {
    Outcome out;
    std::mt19937_64 rng(0x5eed0003u);
    long pairs = 0;
    for (long mv : {5L, 6L, 13L, 21L, 29L, 30L}) {
        GroupContext ctx{Int(mv)};
        std::vector<PrimitiveTriple> pool = build_pool(ctx);
        for (int trial = 0; trial < 200 && out.ok; ++trial) {
            PrimitiveTriple t1 = random_element(ctx, pool, rng);
            PrimitiveTriple t2 = random_element(ctx, pool, rng);
            QuadForm f1 = triple_class(ctx, t1);
            QuadForm f2 = triple_class(ctx, t2);
            if (!(triple_class(ctx, add(ctx, t1, t2)) == compose(f1, f2)))
                out.fail("homomorphism breaks for m=" + s(mv));
            if (!is_principal(compose(f1, f1)))
                out.fail("image class with order above 2 for m=" + s(mv));
            ++pairs;
        }
    }
    if (out.ok)
        out.note = s(pairs) + " random pairs map homomorphically; every image squares trivially";
    return out;
}

// 4. Pell generators land in the principal class whenever x^2-my^2=-1 is
// solvable, for every squarefree m up to 200.
Outcome criterion_4() {
    Outcome out;
    int groups = 0;
    for (long mv = 2; mv <= 200; ++mv) {
        if (squarefree_part(mv).root != 1) continue;
        GroupContext ctx{Int(mv)};
        if (!ctx.fundamental().negative) continue;
        ++groups;
        for (unsigned long n = 1; n <= 4 && out.ok; ++n)
            if (!is_principal(triple_class(ctx, pell_generator(ctx, n))))
                out.fail("nontrivial class for m=" + s(mv) + ", n=" + std::to_string(n));
    }
    if (groups == 0) out.fail("no squarefree m <= 200 with a negative Pell solution");
    if (out.ok)
        out.note = "Pell generators n<=4 are principal for all " + s(groups) +
                   " qualifying m <= 200";
    return out;
}

// 5. Composition gcds always factor as a square or twice a square.
Outcome criterion_5() {
    Outcome out;
    std::mt19937_64 rng(0x5eed0005u);
    long products = 0, nontrivial = 0;
    for (long mv : {2L, 3L, 5L, 6L, 7L}) {
        GroupContext ctx{Int(mv)};
        std::vector<PrimitiveTriple> pool = build_pool(ctx);
        for (int trial = 0; trial < 500 && out.ok; ++trial) {
            Composition comp = add_full(ctx, random_element(ctx, pool, rng),
                                        random_element(ctx, pool, rng));
            bool fits = is_perfect_square(comp.g).has_value() ||
                        (mpz_even_p(comp.g.get_mpz_t()) &&
                         is_perfect_square(comp.g / 2).has_value());
            if (!fits) out.fail("gcd " + comp.g.get_str() + " for m=" + s(mv));
            if (comp.g > 1) ++nontrivial;
            ++products;
        }
    }
    if (out.ok)
        out.note = s(products) + " products, every gcd of the form d^2 or 2d^2 (" +
                   s(nontrivial) + " nontrivial)";
    return out;
}

// 6. The three sequence identities G_n = 2 a_n, F_2n = F_n G_n and
// G_n^2 - 4(a^2-1) F_n^2 = 4, exactly and modulo random primes.
Outcome criterion_6() {
    Outcome out;
    std::mt19937_64 rng(0x5eed0006u);
    static const std::pair<long, long> cases[] = {{2, 3}, {3, 2}, {9, 5}};
    for (auto [av, mv] : cases) {
        Int a(av);
        std::vector<Int> an(65);
        for (unsigned long n = 1; n <= 64; ++n) an[n] = pell_power(Int(mv), n).first;

        for (unsigned long n = 1; n <= 64 && out.ok; ++n) {
            LucasPair L = lucas_pair(a, n);
            LucasPair L2 = lucas_pair(a, 2 * n);
            if (L.G != 2 * an[n]) out.fail("G_n != 2 a_n at a=" + s(av) + ", n=" + s(n));
            if (L2.F != L.F * L.G) out.fail("F_2n != F_n G_n at a=" + s(av) + ", n=" + s(n));
            if (L.G * L.G - 4 * (a * a - 1) * L.F * L.F != 4)
                out.fail("norm identity fails at a=" + s(av) + ", n=" + s(n));
        }
        for (int trial = 0; trial < 8 && out.ok; ++trial) {
            Int p = random_odd_prime_below_10k(rng);
            for (unsigned long n = 1; n <= 64 && out.ok; ++n) {
                LucasPair L = lucas_pair(a, n, p);
                LucasPair L2 = lucas_pair(a, 2 * n, p);
                if ((L.G - 2 * an[n]) % p != 0)
                    out.fail("G_n mod " + p.get_str() + " at a=" + s(av));
                if ((L2.F - L.F * L.G) % p != 0)
                    out.fail("F_2n mod " + p.get_str() + " at a=" + s(av));
                if ((L.G * L.G - 4 * (a * a - 1) * L.F * L.F - 4) % p != 0)
                    out.fail("norm identity mod " + p.get_str() + " at a=" + s(av));
            }
        }
    }
    if (out.ok) out.note = "identities hold for n <= 64, a in {2,3,9}, exactly and mod 24 primes";
    return out;
}

// 7. Odd rank is equivalent to a full-period scan finding no G_n = 0.
Outcome criterion_7() {
    Outcome out;
    long tested = 0;
    for (long mv : {2L, 3L, 5L, 6L, 7L}) {
        GroupContext ctx{Int(mv)};
        const unsigned long a = ctx.fundamental().a.get_ui();
        const unsigned long excluded = 2 * a * (a * a - 1);
        for (Int p(3); p < 2000 && out.ok; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
            const unsigned long pv = p.get_ui();
            if (excluded % pv == 0) continue;

            // walk (F_n, F_{n+1}) mod p over one full period; G_n = 0 is
            // equivalent to F_{n+1} = a F_n since p is odd
            bool hit = false;
            bool closed = false;
            unsigned long f0 = 0, f1 = 1;
            const unsigned long am = a % pv, twoa = (2 * a) % pv;
            for (unsigned long steps = 0; steps < 6 * (pv + 1); ++steps) {
                if (f1 == am * f0 % pv) hit = true;
                const unsigned long f2 = (twoa * f1 + pv - f0) % pv;
                f0 = f1;
                f1 = f2;
                if (f0 == 0 && f1 == 1) {
                    closed = true;
                    break;
                }
            }
            if (!closed) {
                out.fail("period did not close for m=" + s(mv) + ", p=" + s((long)pv));
                break;
            }

            RankResult rank = lucas_rank(Int((long)a), p);
            const bool rho_odd = mpz_odd_p(rank.rho.get_mpz_t());
            if (rho_odd != !hit || rank.divides_some_a_n != hit)
                out.fail("parity disagrees with the period scan at m=" + s(mv) + ", p=" +
                         s((long)pv));
            ++tested;
        }
    }
    if (out.ok) out.note = "rank parity matches the period scan for " + s(tested) + " (m,p) cases";
    return out;
}

// 8. The splitting criterion never claims membership wrongly.
Outcome criterion_8() {
    Outcome out;
    long positives = 0;
    for (long mv : {2L, 3L, 5L, 6L, 7L, 29L}) {
        GroupContext ctx{Int(mv)};
        for (Int p(3); p <= 10000 && out.ok; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
            if (ctx.m() % p == 0) continue;
            if (!splitting_criterion(ctx, p)) continue;
            ++positives;
            if (!in_lambda(ctx, p).in_lambda)
                out.fail("criterion accepts p=" + p.get_str() + " outside the sieve for m=" +
                         s(mv));
        }
    }
    if (positives == 0) out.fail("criterion fired on no prime at all");
    if (out.ok)
        out.note = "all " + s(positives) + " criterion positives up to 10^4 are members";
    return out;
}

// 9. The octic splits over Q exactly when the negative Pell equation is
// solvable, and the quartic factors multiply back exactly.
Outcome criterion_9() {
    Outcome out;
    int reducible = 0;
    for (long mv = 2; mv <= 200; ++mv) {
        if (squarefree_part(mv).root != 1) continue;
        PellFundamental fund = least_pell(mv);
        RationalFactorization rf = rational_factorization(fund.a);
        if (rf.reducible != fund.negative.has_value()) {
            out.fail("reducibility disagrees with the negative Pell test at m=" + s(mv));
            continue;
        }
        if (!rf.reducible) continue;
        ++reducible;
        const auto& [lo, hi] = *rf.factors;
        std::vector<Int> prod(9, Int(0));
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = 0; j < hi.size(); ++j) prod[i + j] += lo[i] * hi[j];
        std::vector<Int> want{1, 0, 0, 0, -2 * fund.a, 0, 0, 0, 1};
        if (prod != want) out.fail("quartic factors do not multiply back at m=" + s(mv));
    }
    if (out.ok)
        out.note = "reducibility matches negative Pell for all squarefree m <= 200 (" +
                   s(reducible) + " reducible)";
    return out;
}

// 10. class_number agrees with a direct reduced-form double loop.
Outcome criterion_10() {
    Outcome out;
    auto brute = [](const Int& D) {
        Int count = 0;
        for (Int a = 1; 3 * a * a <= -D; ++a)
            for (Int b = 1 - a; b <= a; ++b) {
                Int num = b * b - D;
                if (num % (4 * a) != 0) continue;
                Int c = num / (4 * a);
                if (c < a) continue;
                if (a == c && b < 0) continue;
                if (gcd(gcd(a, b), c) != 1) continue;
                ++count;
            }
        return count;
    };

    int checked = 0;
    for (long mv = 2; mv <= 200; ++mv) {
        if (squarefree_part(mv).root != 1) continue;
        if (class_number(mv) != brute(discriminant(mv).D))
            out.fail("class number disagrees with the double loop at m=" + s(mv));
        ++checked;
    }
    if (class_number(5) != 2) out.fail("h(-20) != 2");
    if (class_number(6) != 2) out.fail("h(-24) != 2");
    if (out.ok) out.note = "class numbers agree with the double loop for " + s(checked) + " m";
    return out;
}

// 11. a_{2^i} are pairwise coprime, and the m=5 witnesses over 29, 41, 61
// have pairwise-coprime odd third components.
Outcome criterion_11() {
    Outcome out;
    for (long mv : {2L, 3L, 5L, 6L, 7L}) {
        Int a[5];
        for (int i = 0; i <= 4; ++i) a[i] = pell_power(Int(mv), 1UL << i).first;
        for (int i = 1; i <= 4; ++i)
            for (int j = 0; j < i; ++j)
                if (gcd(a[i], a[j]) != 1)
                    out.fail("gcd(a_" + s(1L << i) + ", a_" + s(1L << j) + ") > 1 for m=" +
                             s(mv));
    }

    GroupContext five(5);
    std::vector<Int> zs;
    for (long pv : {29L, 41L, 61L}) {
        PrimeWitnessTriple w = triple_from_prime(five, pv);
        if (mpz_even_p(w.triple.z.get_mpz_t()))
            out.fail("witness for p=" + s(pv) + " has an even third component");
        zs.push_back(w.triple.z);
    }
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j)
            if (gcd(zs[i], zs[j]) != 1) out.fail("witness third components share a factor");

    if (out.ok) out.note = "power subsequences pairwise coprime; m=5 witnesses coprime and odd";
    return out;
}

int g_failures = 0;

void run_criterion(int id, double budget, Outcome (*body)()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("unhandled exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && budget > 0 && secs > budget) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "finished in %.2f s, over the %.0f s budget", secs, budget);
        out.fail(msg);
    }
    std::printf("%s criterion %d: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", id, out.note.c_str(),
                secs);
    std::fflush(stdout);
    if (!out.ok) ++g_failures;
}

}  // namespace

int main() {
    run_criterion(1, kBudgetScan, criterion_1);
    run_criterion(2, kBudgetWorked, criterion_2);
    run_criterion(3, 0, criterion_3);
    run_criterion(4, kBudgetKernel, criterion_4);
    run_criterion(5, 0, criterion_5);
    run_criterion(6, 0, criterion_6);
    run_criterion(7, 0, criterion_7);
    run_criterion(8, kBudgetSieve, criterion_8);
    run_criterion(9, 0, criterion_9);
    run_criterion(10, 0, criterion_10);
    run_criterion(11, 0, criterion_11);
    return g_failures == 0 ? 0 : 1;
}
