#include "pelltriples/polyfp.hpp"

#include <stdexcept>

#include "pelltriples/errors.hpp"

namespace pelltriples {

namespace {

using Poly = std::vector<Int>;

void trim(Poly& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int mod_p(const Int& v, const Int& p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

Poly mul(const Poly& a, const Poly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (Int& c : out) c = mod_p(c, p);
    trim(out);
    return out;
}

// Remainder of a by b; b need not be monic.
Poly rem(Poly a, const Poly& b, const Int& p) {
    trim(a);
    Int lead_inv;
    if (mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t()) == 0)
        throw ContractViolation("leading coefficient not invertible");
    while (a.size() >= b.size()) {
        Int q = mod_p(a.back() * lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = mod_p(a[shift + j] - q * b[j], p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const Int& p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^e mod f by square-and-multiply over the bits of e.
Poly x_pow_mod(const Int& e, const Poly& f, const Int& p) {
    Poly result{Int(1)};
    Poly base{Int(0), Int(1)};
    if (base.size() >= f.size()) base = rem(base, f, p);
    for (mp_bitcnt_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
        result = mul(result, result, p);
        if (result.size() >= f.size()) result = rem(result, f, p);
        if (mpz_tstbit(e.get_mpz_t(), bit)) {
            result = mul(result, base, p);
            if (result.size() >= f.size()) result = rem(result, f, p);
        }
    }
    return result;
}

Poly splitting_poly(const Int& a) {
    Poly f(9, Int(0));
    f[0] = 1;
    f[4] = -2 * a;
    f[8] = 1;
    return f;
}

// Exact product in Z[x], no reduction.
Poly mul_exact(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

PolyFp::PolyFp(Int modulus, std::vector<Int> c) : p(std::move(modulus)), coeffs(std::move(c)) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("modulus must be an odd prime");
    for (Int& v : coeffs) v = mod_p(v, p);
    trim(coeffs);
}

int count_distinct_roots(const PolyFp& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() == 0) return 0;
    Poly h = x_pow_mod(f.p, f.coeffs, f.p);
    // h - x, the image of x^p - x mod f
    if (h.size() < 2) h.resize(2, Int(0));
    h[1] = mod_p(h[1] - 1, f.p);
    trim(h);
    Poly g = poly_gcd(f.coeffs, h, f.p);
    return static_cast<int>(g.size()) - 1;
}

bool splits_completely(const Int& a, const Int& p) {
    if (a < 2) throw std::invalid_argument("a must be at least 2");
    PolyFp f(p, splitting_poly(a));
    return count_distinct_roots(f) == 8;
}

RationalFactorization rational_factorization(const Int& a) {
    if (a < 2) throw std::invalid_argument("a must be at least 2");
    if (is_perfect_square(2 * (a + 1)))
        throw ContractViolation("2(a+1) is a perfect square; a is not a least Pell coefficient");
    RationalFactorization out;
    auto root = is_perfect_square(2 * (a - 1));
    if (!root) return out;
    Int t = *root;
    Poly minus{Int(-1), Int(0), -t, Int(0), Int(1)};
    Poly plus{Int(-1), Int(0), t, Int(0), Int(1)};
    if (mul_exact(minus, plus) != splitting_poly(a))
        throw ContractViolation("factor expansion mismatch");
    out.reducible = true;
    out.t = std::move(t);
    out.factors = {std::move(minus), std::move(plus)};
    return out;
}

}  // namespace pelltriples
