#include "pelltriples/triplegroup.hpp"

#include <sstream>

namespace pelltriples {

GroupContext::GroupContext(Int m, const FactorConfig& config) : m_(std::move(m)) {
    if (m_ < 2)
        throw std::invalid_argument("GroupContext: m must be > 1");
    if (squarefree_part(m_, config).root != 1)
        throw std::invalid_argument("GroupContext: m must be squarefree");
    fundamental_ = least_pell(m_);
}

PrimitiveTriple identity_triple() { return {1, 0, 1}; }

namespace {

// [x,y,z] ~ [-x,-y,z]: pick the representative with y > 0, or x > 0 when
// y = 0.
void canonical_sign(PrimitiveTriple& t) {
    if (t.y < 0 || (t.y == 0 && t.x < 0)) {
        t.x = -t.x;
        t.y = -t.y;
    }
}

// z enters only through its square, so its sign is dropped, not compensated.
PrimitiveTriple reduce_by_gcd(const Int& x, const Int& y, const Int& z, Int& g_out) {
    Int g = gcd(gcd(x, y), z);
    PrimitiveTriple t{x / g, y / g, abs(z) / g};
    canonical_sign(t);
    g_out = g;
    return t;
}

} // namespace

PrimitiveTriple normalize(const GroupContext& ctx, const Int& x, const Int& y, const Int& z) {
    if (z == 0)
        throw std::invalid_argument("normalize: z must be nonzero");
    if (x * x + ctx.m() * y * y != z * z)
        throw std::invalid_argument("normalize: (x,y,z) is not on x^2 + m y^2 = z^2");
    Int g;
    PrimitiveTriple t = reduce_by_gcd(x, y, z, g);
    if (t.x == 0)
        throw ContractViolation("normalize: x = 0 cannot happen for squarefree m > 1");
    return t;
}

Composition add_full(const GroupContext& ctx, const PrimitiveTriple& t1,
                     const PrimitiveTriple& t2) {
    const Int X = t1.x * t2.x - ctx.m() * t1.y * t2.y;
    const Int Y = t1.x * t2.y + t1.y * t2.x;
    const Int Z = t1.z * t2.z;
    Composition result;
    result.triple = reduce_by_gcd(X, Y, Z, result.g);
    return result;
}

PrimitiveTriple add(const GroupContext& ctx, const PrimitiveTriple& t1,
                    const PrimitiveTriple& t2) {
    return add_full(ctx, t1, t2).triple;
}

PrimitiveTriple neg(const GroupContext& ctx, const PrimitiveTriple& t) {
    (void)ctx;
    PrimitiveTriple r{t.x, -t.y, t.z};
    canonical_sign(r);
    return r;
}

PrimitiveTriple scalar_mul(const GroupContext& ctx, const Int& k, const PrimitiveTriple& t) {
    if (k == 0)
        return identity_triple();
    if (k < 0)
        return scalar_mul(ctx, -k, neg(ctx, t));

    PrimitiveTriple acc = identity_triple();
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        acc = add(ctx, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
            acc = add(ctx, acc, t);
    }
    return acc;
}

Order order(const GroupContext& ctx, const PrimitiveTriple& t) {
    if (t == identity_triple())
        return Order::one;
    // Torsion beyond the identity is Z/3Z and occurs only for m = 3, so a
    // single probe settles everything.
    if (ctx.m() == 3 && scalar_mul(ctx, 3, t) == identity_triple())
        return Order::three;
    return Order::infinite;
}

PrimitiveTriple pell_generator(const GroupContext& ctx, unsigned long n) {
    auto [a_n, b_n] = pell_power(ctx.fundamental(), n);
    return PrimitiveTriple{1, b_n, a_n};
}

std::string format_triple(const PrimitiveTriple& t) {
    std::ostringstream out;
    out << t.x << ',' << t.y << ',' << t.z;
    return out.str();
}

std::array<Int, 3> parse_csv_triple(const std::string& text) {
    std::array<Int, 3> out;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t end = (i == 2) ? text.size() : text.find(',', start);
        if (end == std::string::npos)
            throw std::invalid_argument("triple must be x,y,z");
        const std::string part = text.substr(start, end - start);
        if (part.empty() || mpz_set_str(out[i].get_mpz_t(), part.c_str(), 10) != 0)
            throw std::invalid_argument("triple component is not a decimal integer: '" + part + "'");
        start = end + 1;
    }
    if (text.find(',', start) != std::string::npos)
        throw std::invalid_argument("triple must have exactly three components");
    return out;
}

} // namespace pelltriples
