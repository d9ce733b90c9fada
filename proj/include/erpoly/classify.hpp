#pragma once

#include <optional>

#include "erpoly/decompose.hpp"

namespace erpoly {

enum class Verdict { ExpandingCandidate, AdditivePair, MultiplicativePair };

/// Certificate for an additive pair: P = f(g1 u(x) + d1 v(y)) and
/// Q = g(g2 u(x) + d2 v(y)), with u monic, u(0) = v(0) = 0.
/// Canonicalized so gamma1 = delta1 = gamma2 = 1 and only delta2 is free.
struct AdditivePairCert {
    UniPoly f, g;
    UniPoly u, v;
    Rat gamma1{1}, delta1{1}, gamma2{1}, delta2{1};
};

/// Certificate for a multiplicative pair: P = f(u^m1(x) v^n1(y)),
/// Q = g(u^m2(x) v^n2(y)); u, v monic and not proper powers,
/// gcd(m1, n1) = gcd(m2, n2) = 1.
struct MultiplicativePairCert {
    UniPoly f, g;
    UniPoly u, v;
    unsigned m1 = 1, n1 = 1, m2 = 1, n2 = 1;
};

struct PairClassification {
    Verdict verdict = Verdict::ExpandingCandidate;
    std::optional<AdditivePairCert> additive;
    std::optional<MultiplicativePairCert> multiplicative;
};

/// Certificate on a single base u: P = f(gamma1 u(x) + delta1 u(y)),
/// Q = g(gamma2 u(x) + delta2 u(y)); the scalar pairs are reduced so
/// delta_i / gamma_i is in lowest terms with gamma_i > 0.
struct SymmetricAdditiveCert {
    UniPoly f, g;
    UniPoly u;
    Rat gamma1{1}, delta1{1}, gamma2{1}, delta2{1};
};

/// P = f(u^m1(x) u^n1(y)), Q = g(u^m2(x) u^n2(y)).
struct SymmetricMultiplicativeCert {
    UniPoly f, g;
    UniPoly u;
    unsigned m1 = 1, n1 = 1, m2 = 1, n2 = 1;
};

struct SymmetricClassification {
    Verdict verdict = Verdict::ExpandingCandidate;
    std::optional<SymmetricAdditiveCert> additive;
    std::optional<SymmetricMultiplicativeCert> multiplicative;
};

/// Trichotomy for a pair (P, Q). Certificates are recomposition-checked
/// before being returned.
PairClassification classify_pair(const BiPoly& p, const BiPoly& q);

/// Symmetric variant: both inner slots constrained to a common base u,
/// decided via classify_pair on (P, Q) and (P with variables swapped, Q).
SymmetricClassification classify_symmetric(const BiPoly& p, const BiPoly& q);

/// Single-polynomial variant: classify_symmetric(P, P).
SymmetricClassification classify_single(const BiPoly& p);

}  // namespace erpoly
