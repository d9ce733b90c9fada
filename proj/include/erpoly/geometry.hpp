#pragma once

#include <optional>
#include <vector>

#include "erpoly/bipoly.hpp"

namespace erpoly {

/// One curve {(P(a, b1), Q(a, b2)) : a real} out of the family attached to a
/// fixed ambient pair (P, Q).
struct CurveParams {
    Rat b1, b2;
};

enum class DimVerdict { Finite, OneDimensional };

struct IntersectionDim {
    DimVerdict verdict = DimVerdict::Finite;
    // Nonconstant common factor of the two pullbacks, present iff
    // OneDimensional. It divides both pullbacks exactly.
    std::optional<BiPoly> witness;
};

/// A parameter value dropped from the probe because it makes a section
/// constant: P(x, b) for for_p, Q(x, b) otherwise.
struct DegenerateValue {
    Rat b;
    bool for_p;
};

struct ScatterReport {
    std::vector<CurveParams> grid;
    // counts[i] = number of other grid points whose curve meets grid[i]'s
    // curve in a one-dimensional set. Symmetric by construction.
    std::vector<int> counts;
    std::vector<DegenerateValue> excluded;
    int threshold = 0;
    int max_count = 0;
    bool scattered = false;
};

/// Decides whether the curves for b and bp intersect in a one-dimensional
/// set: form pullbacks F(s,t) = P(s,b1) - P(t,b1') and
/// G(s,t) = Q(s,b2) - Q(t,b2') and test gcd_bi(F, G) for nonconstancy.
/// Exact; no sampling. Throws degenerate_parameters_error when any of the
/// four sections is constant.
IntersectionDim intersection_dim(const BiPoly& p, const BiPoly& q,
                                 const CurveParams& b, const CurveParams& bp);

/// All-pairs intersection probe over the grid S x S, self-pairs excluded.
/// Degenerate parameter values are dropped and reported rather than raised.
/// Verdict: scattered-on-grid iff max count <= threshold; the default
/// threshold is 4 * (deg P + deg Q)^2 (total degrees), a grid-size-free
/// heuristic — growth across nested grids is the robust signal.
ScatterReport scatter_probe(const BiPoly& p, const BiPoly& q,
                            const std::vector<Rat>& s,
                            std::optional<int> threshold = std::nullopt);

}  // namespace erpoly
