#include "pelltriples/pell.hpp"

#include <array>

namespace pelltriples {

CFExpansion cf_sqrt(const Int& m) {
    if (m < 2)
        throw std::invalid_argument("cf_sqrt: m must be >= 2");
    if (is_perfect_square(m))
        throw std::invalid_argument("cf_sqrt: m must not be a perfect square");

    CFExpansion cf;
    cf.m = m;
    cf.u0 = isqrt(m);

    // P_{i+1} = u_i Q_i - P_i,  Q_{i+1} = (m - P_{i+1}^2) / Q_i.  The period
    // is closed when (P,Q) first revisits its state after the initial step.
    Int P = cf.u0;
    Int Q = m - cf.u0 * cf.u0;
    const Int P1 = P, Q1 = Q;
    while (true) {
        Int u = (cf.u0 + P) / Q;
        cf.period.push_back(u);
        P = u * Q - P;
        Q = (m - P * P) / Q;
        if (P == P1 && Q == Q1)
            break;
    }
    if (cf.period.back() != 2 * cf.u0)
        throw ContractViolation("cf_sqrt: period does not end in 2*u0");
    return cf;
}

Convergent ConvergentStream::next() {
    const Int& u = cf_.quotient(i_);
    Convergent c;
    c.i = i_;
    c.h = u * h1_ + h2_;
    c.k = u * k1_ + k2_;
    h2_ = h1_;
    h1_ = c.h;
    k2_ = k1_;
    k1_ = c.k;
    ++i_;
    return c;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count) {
    ConvergentStream stream(cf);
    std::vector<Convergent> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(stream.next());
    return out;
}

PellFundamental least_pell(const Int& m) {
    CFExpansion cf = cf_sqrt(m);
    const std::size_t r = cf.period_length();
    const std::size_t l = (r % 2 == 0) ? r : 2 * r;

    ConvergentStream stream(cf);
    Convergent at_r_minus_1, at_l_minus_1;
    for (std::size_t i = 0; i < l; ++i) {
        Convergent c = stream.next();
        if (c.i == r - 1)
            at_r_minus_1 = c;
        if (c.i == l - 1)
            at_l_minus_1 = c;
    }

    PellFundamental fundamental;
    fundamental.m = m;
    fundamental.a = at_l_minus_1.h;
    fundamental.b = at_l_minus_1.k;
    if (fundamental.a * fundamental.a - m * fundamental.b * fundamental.b != 1)
        throw ContractViolation("least_pell: h_{l-1}, k_{l-1} do not solve the +1 equation");
    if (r % 2 == 1) {
        const Int& a0 = at_r_minus_1.h;
        const Int& b0 = at_r_minus_1.k;
        if (a0 * a0 - m * b0 * b0 != -1)
            throw ContractViolation("least_pell: odd period but h_{r-1}, k_{r-1} miss -1");
        fundamental.negative = {a0, b0};
    }
    return fundamental;
}

std::pair<Int, Int> pell_power(const PellFundamental& fundamental, unsigned long n) {
    if (n < 1)
        throw std::invalid_argument("pell_power: n must be >= 1");
    // Square and multiply in Z[sqrt(m)]: (A,B)(C,D) = (AC + mBD, AD + BC).
    const Int& m = fundamental.m;
    Int ra = 1, rb = 0;
    Int pa = fundamental.a, pb = fundamental.b;
    unsigned long e = n;
    while (e > 0) {
        if (e & 1) {
            Int t = ra * pa + m * rb * pb;
            rb = ra * pb + rb * pa;
            ra = t;
        }
        e >>= 1;
        if (e > 0) {
            Int t = pa * pa + m * pb * pb;
            pb = 2 * pa * pb;
            pa = t;
        }
    }
    return {ra, rb};
}

std::pair<Int, Int> pell_power(const Int& m, unsigned long n) {
    return pell_power(least_pell(m), n);
}

namespace {

// Column-major is irrelevant for symmetric use; entries are
// [ [m00 m01], [m10 m11] ].
using Mat2 = std::array<Int, 4>;

Int reduce(Int v, const std::optional<Int>& modulus) {
    if (!modulus)
        return v;
    Int r = v % *modulus;
    if (r < 0)
        r += *modulus;
    return r;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y, const std::optional<Int>& modulus) {
    Mat2 r{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
           x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    for (Int& v : r)
        v = reduce(std::move(v), modulus);
    return r;
}

} // namespace

LucasPair lucas_pair(const Int& a, unsigned long n, const std::optional<Int>& modulus) {
    if (a < 2)
        throw std::invalid_argument("lucas_pair: a must be >= 2");
    if (modulus && (*modulus < 3 || mpz_even_p(modulus->get_mpz_t())))
        throw std::invalid_argument("lucas_pair: modulus must be an odd prime");

    // M^n = (F_{n+1} -F_n; F_n -F_{n-1}) and G_n = F_{n+1} - F_{n-1}.
    Mat2 result{1, 0, 0, 1};
    Mat2 base{reduce(2 * a, modulus), reduce(Int(-1), modulus), 1, 0};
    unsigned long e = n;
    while (e > 0) {
        if (e & 1)
            result = mat_mul(result, base, modulus);
        e >>= 1;
        if (e > 0)
            base = mat_mul(base, base, modulus);
    }

    LucasPair pair;
    pair.n = n;
    pair.modulus = modulus;
    pair.F = result[2];
    // result[0] = F_{n+1} and result[3] = -F_{n-1}, hence the sum.
    pair.G = reduce(result[0] + result[3], modulus);
    return pair;
}

RankResult lucas_rank(const Int& a, const Int& p) {
    if (a < 2)
        throw std::invalid_argument("lucas_rank: a must be >= 2");
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("lucas_rank: p must be an odd prime");

    const Int disc = a * a - 1;
    if (disc % p == 0) {
        // Double characteristic root: F_n = n a^{n-1} mod p, so the first
        // vanishing index is p itself, which is odd.
        return RankResult{p, p, false, true};
    }

    Int prev = 0, cur = 1;
    const Int twice_a = 2 * a % p;
    Int bound = p + 1;
    for (Int n = 1; n <= bound; ++n) {
        if (cur == 0) {
            int chi = jacobi(disc, p);
            if ((p - chi) % n != 0)
                throw ContractViolation("lucas_rank: rho does not divide p - (disc|p)");
            return RankResult{p, n, mpz_even_p(n.get_mpz_t()) != 0, false};
        }
        Int nxt = (twice_a * cur - prev) % p;
        if (nxt < 0)
            nxt += p;
        prev = cur;
        cur = nxt;
    }
    throw ContractViolation("lucas_rank: no vanishing index up to p + 1");
}

} // namespace pelltriples
