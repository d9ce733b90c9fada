#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "erpoly/classify.hpp"
#include "erpoly/interval.hpp"
#include "erpoly/roots.hpp"

namespace erpoly {

/// One real number, either an exact rational or an algebraic number carried
/// as a shrinking bracket around a root of its squarefree defining polynomial.
struct RealElem {
    Interval box;
    UniPoly defining;  // empty when exact
    bool exact = true;

    static RealElem from_rat(const Rat& v) {
        return {Interval::point(v), UniPoly::zero(), true};
    }
    static RealElem algebraic(UniPoly squarefree, const RootInterval& r);

    Rat midpoint() const { return (box.lo + box.hi) / 2; }
    Rat width() const { return box.width(); }
    /// Shrink the bracket to width <= target. No-op on exact elements.
    void refine(const Rat& target_width);
};

struct WitnessSets {
    std::vector<RealElem> a, b;
    int n = 0;
    unsigned k = 0;  // grid parameter that produced the sets
};

enum class SetFamily {
    WitnessAdditive,
    WitnessMultiplicative,
    ArithmeticProgression,
    GeometricProgression,
    UniformRandom
};

struct SeriesPoint {
    int n;
    std::int64_t card_p, card_q, max_card;
};

struct ExpansionSeries {
    std::vector<SeriesPoint> points;
    double fitted_exponent = 0.0;  // least-squares slope of log(max) vs log(n)
    double fit_r2 = 0.0;
    SetFamily family = SetFamily::ArithmeticProgression;
};

enum class SizeMode { Exact, Certified };

/// Builds the linear-growth witness sets attached to a structured pair:
/// additive targets {g1 g2 l + d1 d2 l'} for A and {g1 d2 l + d1 g2 l'} for B
/// (0 <= l, l' <= k), pulled back through u resp. v; multiplicative targets
/// {2^l} through u resp. v. k grows until n preimages exist; when u has even
/// degree and a target has no real preimage, -target is tried as well.
/// Exactly n elements are returned, smallest first, pairwise distinct with
/// certified separation wider than twice any bracket.
/// Throws unreachable_cardinality_error when k exceeds 64 * n, and
/// precondition_error when cls carries no certificate.
WitnessSets build_witness_sets(const PairClassification& cls, int n);

/// |{P(a, b)}| over the two element lists. Exact mode requires all-rational
/// input. Certified mode evaluates over interval boxes and merges values only
/// when their enclosures overlap; a merged cluster wider than tolerance
/// triggers refinement of every element (width halved) and a retry, up to a
/// cap, after which precision_exhausted_error is thrown.
std::int64_t image_size(const BiPoly& p, std::vector<RealElem> a,
                        std::vector<RealElem> b, SizeMode mode,
                        const Rat& tolerance = Rat(1) / Rat(1 << 20));

/// Builds the family's sets at every n in n_grid (strictly increasing,
/// length >= 3), measures both image sizes, and fits the growth exponent.
/// Witness families classify (P, Q) first and require the matching verdict.
ExpansionSeries run_series(const BiPoly& p, const BiPoly& q, SetFamily family,
                           const std::vector<int>& n_grid,
                           std::uint64_t seed = 0,
                           const Rat& tolerance = Rat(1) / Rat(1 << 20));

const char* family_name(SetFamily f);

/// Header `n,card_P,card_Q,max,family`, one row per point, then a comment
/// line with the fitted exponent and R^2.
void write_csv(const ExpansionSeries& s, std::ostream& out);

}  // namespace erpoly
