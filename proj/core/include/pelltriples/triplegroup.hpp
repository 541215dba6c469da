#ifndef PELLTRIPLES_TRIPLEGROUP_HPP
#define PELLTRIPLES_TRIPLEGROUP_HPP

#include <array>
#include <string>

#include "pelltriples/intkernel.hpp"
#include "pelltriples/pell.hpp"

namespace pelltriples {

/// Fixed squarefree m > 1 together with the cached fundamental Pell
/// solution. Immutable after construction; share freely across threads.
class GroupContext {
public:
    explicit GroupContext(Int m, const FactorConfig& config = {});

    const Int& m() const { return m_; }
    const PellFundamental& fundamental() const { return fundamental_; }

private:
    Int m_;
    PellFundamental fundamental_;
};

/// Canonical representative [x,y,z] of a class of primitive solutions of
/// x^2 + m y^2 = z^2: gcd(x,y,z) = 1, z > 0, and either y > 0 or
/// (y = 0 and x > 0). The two representatives [x,y,z] and [-x,-y,z] of a
/// class collapse to one, so equality is plain field comparison.
struct PrimitiveTriple {
    Int x;
    Int y;
    Int z;

    bool operator==(const PrimitiveTriple&) const = default;
};

/// The identity class [1,0,1].
PrimitiveTriple identity_triple();

/// Canonical primitive representative of (x,y,z); the input must satisfy
/// x^2 + m y^2 = z^2 with z != 0 or std::invalid_argument is thrown.
PrimitiveTriple normalize(const GroupContext& ctx, const Int& x, const Int& y, const Int& z);

/// Group sum together with the gcd that was divided out, for callers that
/// care about its d^2 2^eps structure.
struct Composition {
    PrimitiveTriple triple;
    Int g;
};

Composition add_full(const GroupContext& ctx, const PrimitiveTriple& t1,
                     const PrimitiveTriple& t2);
PrimitiveTriple add(const GroupContext& ctx, const PrimitiveTriple& t1,
                    const PrimitiveTriple& t2);

/// Inverse class (the conjugate [x,-y,z], canonicalized).
PrimitiveTriple neg(const GroupContext& ctx, const PrimitiveTriple& t);

/// k-fold sum by double-and-add; k may be negative or zero.
PrimitiveTriple scalar_mul(const GroupContext& ctx, const Int& k, const PrimitiveTriple& t);

/// Possible orders of a class: the identity, the exceptional 3-torsion of
/// m = 3, or infinite. Nothing else occurs.
enum class Order { one, three, infinite };

Order order(const GroupContext& ctx, const PrimitiveTriple& t);

/// The Pell-subgroup generator [1, b_n, a_n], n >= 1.
PrimitiveTriple pell_generator(const GroupContext& ctx, unsigned long n);

/// "x,y,z" in decimal, the wire format used by the CLI.
std::string format_triple(const PrimitiveTriple& t);

/// Parse "x,y,z"; throws std::invalid_argument on malformed input. The
/// result is raw coordinates, not yet normalized against any m.
std::array<Int, 3> parse_csv_triple(const std::string& text);

} // namespace pelltriples

#endif
