#include "pelltriples/classgroup.hpp"

#include <stdexcept>

#include "pelltriples/errors.hpp"

namespace pelltriples {

namespace {

void check_form(const QuadForm& f) {
    if (f.a <= 0 || f.c <= 0 || f.disc() >= 0)
        throw std::invalid_argument("form must be positive definite");
    if (gcd(gcd(f.a, f.b), f.c) != 1)
        throw std::invalid_argument("form must be primitive");
}

// Bring b into (-a, a] and recompute c from the discriminant.
void normalize_form(QuadForm& f, const Int& D) {
    Int two_a = 2 * f.a;
    Int r = f.b % two_a;
    if (r > f.a) r -= two_a;
    else if (r <= -f.a) r += two_a;
    f.b = r;
    f.c = (f.b * f.b - D) / (4 * f.a);
}

bool is_three_mod_four(const Int& m) { return m % 4 == 3; }

// (1+m)/4 for the half-integer basis; only valid when m = 3 (mod 4).
Int omega_norm_term(const Int& m) { return (1 + m) / 4; }

}  // namespace

Discriminant discriminant(const Int& m) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (squarefree_part(m).root != 1)
        throw std::invalid_argument("m must be squarefree");
    Discriminant d;
    d.m = m;
    d.D = is_three_mod_four(m) ? Int(-m) : Int(-4 * m);
    return d;
}

QuadForm reduce(QuadForm f) {
    check_form(f);
    Int D = f.disc();
    normalize_form(f, D);
    while (f.a > f.c || (f.a == f.c && f.b < 0)) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize_form(f, D);
    }
    if (f.b < 0 && (-f.b == f.a || f.a == f.c)) f.b = -f.b;
    return f;
}

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
    check_form(f1);
    check_form(f2);
    Int D = f1.disc();
    if (D != f2.disc()) throw std::invalid_argument("discriminants differ");

    Int s = (f1.b + f2.b) / 2;
    Int g, u0, v0;
    mpz_gcdext(g.get_mpz_t(), u0.get_mpz_t(), v0.get_mpz_t(), f1.a.get_mpz_t(),
               f2.a.get_mpz_t());
    Int d, v1, w;
    mpz_gcdext(d.get_mpz_t(), v1.get_mpz_t(), w.get_mpz_t(), g.get_mpz_t(),
               s.get_mpz_t());
    Int v = v0 * v1;
    Int a2d = f2.a / d;
    QuadForm out;
    out.a = (f1.a / d) * a2d;
    out.b = f2.b + 2 * a2d * (v * (s - f2.b) - w * f2.c);
    Int num = out.b * out.b - D;
    if (num % (4 * out.a) != 0) throw ContractViolation("composition not integral");
    out.c = num / (4 * out.a);
    return reduce(out);
}

QuadForm principal_form(const Int& m) {
    discriminant(m);
    if (is_three_mod_four(m)) return {Int(1), Int(1), omega_norm_term(m)};
    return {Int(1), Int(0), m};
}

bool is_principal(const QuadForm& f) { return reduce(f).a == 1; }

std::vector<QuadForm> reduced_forms(const Int& m) {
    Discriminant d = discriminant(m);
    std::vector<QuadForm> out;
    Int amax = isqrt(Int(-d.D) / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = 1 - a; b <= a; ++b) {
            Int num = b * b - d.D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

Int class_number(const Int& m) { return Int(reduced_forms(m).size()); }

QuadIdeal hnf_from_generators(const Int& m, const std::vector<std::pair<Int, Int>>& gens) {
    // Close the list under multiplication by omega, then reduce the
    // resulting Z-generating set to a two-element Hermite basis.
    std::vector<std::pair<Int, Int>> all;
    all.reserve(2 * gens.size());
    for (const auto& [u, v] : gens) {
        all.emplace_back(u, v);
        if (is_three_mod_four(m))
            all.emplace_back(-v * omega_norm_term(m), u + v);
        else
            all.emplace_back(-v * m, u);
    }

    Int s = 0, t_acc = 0;
    for (const auto& [u, v] : all) {
        Int g, alpha, beta;
        mpz_gcdext(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t(),
                   s.get_mpz_t(), v.get_mpz_t());
        t_acc = alpha * t_acc + beta * u;
        s = g;
    }
    if (s == 0) throw ContractViolation("generators span a rank-deficient lattice");

    Int n = 0;
    for (const auto& [u, v] : all) n = gcd(n, u - (v / s) * t_acc);
    if (n == 0) throw ContractViolation("generators span a rank-deficient lattice");

    QuadIdeal ideal;
    ideal.m = m;
    ideal.n = n;
    ideal.s = s;
    ideal.t = t_acc % n;
    if (ideal.t < 0) ideal.t += n;

    if (ideal.n % ideal.s != 0 || ideal.t % ideal.s != 0)
        throw ContractViolation("basis not closed under omega");
    Int closure = is_three_mod_four(m)
                      ? Int(ideal.t * ideal.t + ideal.t * ideal.s +
                            ideal.s * ideal.s * omega_norm_term(m))
                      : Int(ideal.t * ideal.t + ideal.s * ideal.s * m);
    if (closure % (ideal.n * ideal.s) != 0)
        throw ContractViolation("basis not closed under omega");
    return ideal;
}

QuadIdeal ideal_from_triple(const GroupContext& ctx, const PrimitiveTriple& t) {
    PrimitiveTriple p = normalize(ctx, t.x, t.y, t.z);
    const Int& m = ctx.m();
    std::vector<std::pair<Int, Int>> gens;
    gens.emplace_back(p.z, Int(0));
    if (is_three_mod_four(m))
        gens.emplace_back(p.x - p.y, 2 * p.y);
    else
        gens.emplace_back(p.x, p.y);
    QuadIdeal ideal = hnf_from_generators(m, gens);
    if ((p.z * p.z) % ideal.norm() != 0)
        throw ContractViolation("ideal norm does not divide z^2");
    return ideal;
}

QuadForm form_from_ideal(const QuadIdeal& ideal) {
    // Principal factor s*O carries no class data; drop it first.
    Int n = ideal.n / ideal.s;
    Int t0 = (ideal.t / ideal.s) % n;
    QuadForm f;
    f.a = n;
    if (is_three_mod_four(ideal.m)) {
        f.b = 2 * t0 + 1;
        f.c = (t0 * t0 + t0 + omega_norm_term(ideal.m)) / n;
    } else {
        f.b = 2 * t0;
        f.c = (t0 * t0 + ideal.m) / n;
    }
    return reduce(f);
}

QuadForm triple_class(const GroupContext& ctx, const PrimitiveTriple& t) {
    return form_from_ideal(ideal_from_triple(ctx, t));
}

std::optional<std::pair<Int, Int>> represents(const Int& c, const Int& m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (c < 0) return std::nullopt;
    for (Int y = isqrt(c / m); y >= 0; --y) {
        auto x = is_perfect_square(c - m * y * y);
        if (x) return std::make_pair(*x, y);
    }
    return std::nullopt;
}

const char* evidence_name(Evidence e) {
    switch (e) {
        case Evidence::m_greater_c: return "m_greater_c";
        case Evidence::representation_failure: return "representation_failure";
        case Evidence::reduced_form_nonprincipal: return "reduced_form_nonprincipal";
    }
    return "unknown";
}

TorsionCertificate certify_order_two(const GroupContext& ctx, const PrimitiveTriple& t) {
    PrimitiveTriple p = normalize(ctx, t.x, t.y, t.z);
    const Int& m = ctx.m();
    if (p.x * p.x - m * p.y * p.y != -1)
        throw NotEligible("triple does not satisfy x^2 - m y^2 = -1");

    QuadIdeal ideal = ideal_from_triple(ctx, p);
    QuadForm image = form_from_ideal(ideal);
    if (is_principal(image))
        throw CertificateRefused("image class is principal; the triple may be a Pell element");

    TorsionCertificate cert;
    cert.triple = p;
    cert.negative_pell_check = true;

    // Twice the class lands in the Pell subgroup: verify the doubling
    // identity 1 + m(2xy)^2 = z^4 and the group-law computation agree.
    Int twice_xy = 2 * p.x * p.y;
    Int z2 = p.z * p.z;
    if (1 + m * twice_xy * twice_xy != z2 * z2)
        throw ContractViolation("doubling identity failed");
    cert.doubling = normalize(ctx, Int(1), -twice_xy, z2);
    if (!(scalar_mul(ctx, Int(2), p) == cert.doubling))
        throw ContractViolation("doubling disagrees with the group law");

    if (m > p.z) {
        cert.evidence = Evidence::m_greater_c;
    } else if (!is_three_mod_four(m) && ideal.norm() == p.z && !represents(p.z, m)) {
        cert.evidence = Evidence::representation_failure;
    } else {
        cert.evidence = Evidence::reduced_form_nonprincipal;
    }
    return cert;
}

}  // namespace pelltriples
