#pragma once

#include <optional>

#include "erpoly/bipoly.hpp"

namespace erpoly {

/// Canonical certificate for P = f(u(x) + v(y)): u monic, u(0) = v(0) = 0,
/// u, v, f nonconstant. Recomposition is checked before a form is returned.
struct AdditiveForm {
    UniPoly f;
    UniPoly u;  // in x
    UniPoly v;  // in y

    bool operator==(const AdditiveForm& o) const {
        return f == o.f && u == o.u && v == o.v;
    }
};

/// Canonical certificate for P = f(u(x) * v(y)): u, v monic nonconstant and
/// pair-primitive (not simultaneously n-th powers for any n >= 2).
struct MultiplicativeForm {
    UniPoly f;
    UniPoly u;  // in x
    UniPoly v;  // in y

    bool operator==(const MultiplicativeForm& o) const {
        return f == o.f && u == o.u && v == o.v;
    }
};

/// Maximal power structure of a monic polynomial: base^exponent = p with the
/// largest possible exponent; base is not itself a proper power.
struct PrimitiveBase {
    UniPoly base;
    unsigned exponent;

    bool operator==(const PrimitiveBase& o) const {
        return base == o.base && exponent == o.exponent;
    }
};

/// Unique canonical additive form of P, or nullopt when none exists.
/// Throws trivial_dependence_error when P depends on only one variable.
std::optional<AdditiveForm> additive_decompose(const BiPoly& p);

/// Unique canonical pair-primitive multiplicative form of P, or nullopt.
std::optional<MultiplicativeForm> multiplicative_decompose(const BiPoly& p);

/// p must be monic and nonconstant.
PrimitiveBase primitive_base(const UniPoly& p);

}  // namespace erpoly
