#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pelltriples/intkernel.hpp"
#include "pelltriples/triplegroup.hpp"

namespace pelltriples {

// Field discriminant of Q(sqrt(-m)): -m when m = 3 (mod 4), else -4m.
struct Discriminant {
    Int m;
    Int D;
};

Discriminant discriminant(const Int& m);

// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    Int a;
    Int b;
    Int c;

    Int disc() const { return b * b - 4 * a * c; }
    bool operator==(const QuadForm&) const = default;
};

// Gauss reduction to the unique reduced representative of the class.
QuadForm reduce(QuadForm f);

// Dirichlet composition; result is reduced. Both forms must be primitive
// with the same discriminant.
QuadForm compose(const QuadForm& f1, const QuadForm& f2);

QuadForm principal_form(const Int& m);
bool is_principal(const QuadForm& f);

std::vector<QuadForm> reduced_forms(const Int& m);
Int class_number(const Int& m);

// Integral ideal with Z-basis {n, t + s*omega}, 0 <= t < n, s | n, s | t,
// where omega = sqrt(-m) for m = 1,2 (mod 4) and (1+sqrt(-m))/2 otherwise.
struct QuadIdeal {
    Int m;
    Int n;
    Int t;
    Int s;

    Int norm() const { return n * s; }
};

// Hermite basis of the O-ideal generated by the given u + v*omega.
QuadIdeal hnf_from_generators(const Int& m, const std::vector<std::pair<Int, Int>>& gens);

// The ideal generated by z and x + y*sqrt(-m).
QuadIdeal ideal_from_triple(const GroupContext& ctx, const PrimitiveTriple& t);

// Reduced form of the class of an ideal.
QuadForm form_from_ideal(const QuadIdeal& ideal);

// Reduced form of the ideal class attached to a primitive triple.
QuadForm triple_class(const GroupContext& ctx, const PrimitiveTriple& t);

// Some x, y >= 0 with x^2 + m y^2 = c, or absent.
std::optional<std::pair<Int, Int>> represents(const Int& c, const Int& m);

enum class Evidence {
    m_greater_c,
    representation_failure,
    reduced_form_nonprincipal,
};

const char* evidence_name(Evidence e);

struct TorsionCertificate {
    PrimitiveTriple triple;
    bool negative_pell_check = false;
    PrimitiveTriple doubling;
    Evidence evidence = Evidence::reduced_form_nonprincipal;
};

// Certified order-2 class: requires x^2 - m y^2 = -1 (NotEligible
// otherwise) and a non-principal image (CertificateRefused otherwise).
TorsionCertificate certify_order_two(const GroupContext& ctx, const PrimitiveTriple& t);

}  // namespace pelltriples
