#pragma once

#include <vector>

#include "erpoly/unipoly.hpp"

namespace erpoly {

/// Isolating interval for one real root of a squarefree polynomial.
/// lo == hi means the root is the rational point itself.
struct RootInterval {
    Rat lo;
    Rat hi;
    bool multiplicity_free = true;

    bool is_exact() const { return lo == hi; }
    Rat midpoint() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }

    bool operator==(const RootInterval& o) const {
        return lo == o.lo && hi == o.hi;
    }
};

/// One disjoint interval per distinct real root of squarefree_part(p),
/// sorted by position. Descartes sign-variation test plus bisection.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

/// Shrink r to width <= target, still bracketing the same root of
/// squarefree_part(p). Throws when r does not bracket a sign change.
RootInterval refine_root(const UniPoly& p, const RootInterval& r,
                         const Rat& target_width);

/// Sign variations of (1+x)^d q((a + b x)/(1 + x)) — an upper bound on the
/// number of roots of q in the open interval (a, b), exact at 0 and 1.
int descartes_variations(const UniPoly& q, const Rat& a, const Rat& b);

}  // namespace erpoly
