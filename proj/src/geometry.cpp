#include "erpoly/geometry.hpp"

#include <algorithm>

#include "erpoly/errors.hpp"

namespace erpoly {

namespace {

// Pullback of the coordinate shared by two sections: F(s,t) = f(s) - g(t).
BiPoly pullback(const UniPoly& f, const UniPoly& g) {
    return BiPoly::from_x(f) - BiPoly::from_y(g);
}

IntersectionDim dim_from_sections(const UniPoly& p1, const UniPoly& p2,
                                  const UniPoly& q1, const UniPoly& q2) {
    BiPoly g = gcd_bi(pullback(p1, p2), pullback(q1, q2));
    IntersectionDim out;
    if (!g.is_constant()) {
        out.verdict = DimVerdict::OneDimensional;
        out.witness = std::move(g);
    }
    return out;
}

}  // namespace

IntersectionDim intersection_dim(const BiPoly& p, const BiPoly& q,
                                 const CurveParams& b, const CurveParams& bp) {
    UniPoly p1 = p.section_y(b.b1);
    UniPoly p2 = p.section_y(bp.b1);
    UniPoly q1 = q.section_y(b.b2);
    UniPoly q2 = q.section_y(bp.b2);
    if (p1.is_constant() || p2.is_constant() || q1.is_constant() ||
        q2.is_constant())
        throw degenerate_parameters_error(
            "intersection_dim: a section P(x,b1) or Q(x,b2) is constant");
    return dim_from_sections(p1, p2, q1, q2);
}

ScatterReport scatter_probe(const BiPoly& p, const BiPoly& q,
                            const std::vector<Rat>& s,
                            std::optional<int> threshold) {
    if (s.empty()) throw precondition_error("scatter_probe: empty sample");
    ScatterReport rep;
    int total = p.total_degree() + q.total_degree();
    rep.threshold = threshold.value_or(4 * total * total);

    // Sections depend on one parameter each; compute them once per value.
    std::vector<UniPoly> p_sec, q_sec;
    std::vector<std::size_t> p_ok, q_ok;
    for (std::size_t i = 0; i < s.size(); ++i) {
        p_sec.push_back(p.section_y(s[i]));
        q_sec.push_back(q.section_y(s[i]));
        if (p_sec.back().is_constant())
            rep.excluded.push_back({s[i], true});
        else
            p_ok.push_back(i);
        if (q_sec.back().is_constant())
            rep.excluded.push_back({s[i], false});
        else
            q_ok.push_back(i);
    }

    struct GridPoint {
        std::size_t i, j;  // indices into s for b1, b2
    };
    std::vector<GridPoint> grid;
    for (std::size_t i : p_ok)
        for (std::size_t j : q_ok) {
            grid.push_back({i, j});
            rep.grid.push_back({s[i], s[j]});
        }
    rep.counts.assign(grid.size(), 0);
    for (std::size_t a = 0; a < grid.size(); ++a)
        for (std::size_t b = a + 1; b < grid.size(); ++b) {
            auto dim = dim_from_sections(p_sec[grid[a].i], p_sec[grid[b].i],
                                         q_sec[grid[a].j], q_sec[grid[b].j]);
            if (dim.verdict == DimVerdict::OneDimensional) {
                ++rep.counts[a];
                ++rep.counts[b];
            }
        }
    rep.max_count = rep.counts.empty()
                        ? 0
                        : *std::max_element(rep.counts.begin(), rep.counts.end());
    rep.scattered = rep.max_count <= rep.threshold;
    return rep;
}

}  // namespace erpoly
