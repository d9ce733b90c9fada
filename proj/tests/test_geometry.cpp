#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erpoly/errors.hpp"
#include "erpoly/geometry.hpp"
#include "helpers.hpp"

using namespace erpoly;
using erpoly::testing::Gen;

namespace {
const BiPoly X = BiPoly::monomial(Rat(1), 1, 0);
const BiPoly Y = BiPoly::monomial(Rat(1), 0, 1);

std::vector<Rat> range(int lo, int hi) {
    std::vector<Rat> s;
    for (int i = lo; i <= hi; ++i) s.push_back(Rat(i));
    return s;
}
}  // namespace

TEST_CASE("worked intersection examples") {
    BiPoly p = X + Y, q = X * Y;
    CHECK(intersection_dim(p, q, {Rat(1), Rat(2)}, {Rat(1), Rat(3)}).verdict ==
          DimVerdict::Finite);
    auto self = intersection_dim(p, q, {Rat(1), Rat(2)}, {Rat(1), Rat(2)});
    CHECK(self.verdict == DimVerdict::OneDimensional);
    REQUIRE(self.witness.has_value());
    // both curves are the line Y = X + 2
    auto line = intersection_dim(p, p, {Rat(1), Rat(3)}, {Rat(2), Rat(4)});
    CHECK(line.verdict == DimVerdict::OneDimensional);
}

TEST_CASE("degenerate parameters throw") {
    // Q = x*y: section at b2 = 0 is constant
    CHECK_THROWS_AS(
        intersection_dim(X + Y, X * Y, {Rat(1), Rat(0)}, {Rat(1), Rat(2)}),
        degenerate_parameters_error);
}

TEST_CASE("symmetry and self-intersection on random curves") {
    Gen g(51);
    BiPoly p = (X + Y) * (X + Y), q = X + Y * Rat(2);
    for (int trial = 0; trial < 15; ++trial) {
        CurveParams a{g.coefficient(5), g.coefficient(5)};
        CurveParams b{g.coefficient(5), g.coefficient(5)};
        auto d1 = intersection_dim(p, q, a, b);
        auto d2 = intersection_dim(p, q, b, a);
        CHECK(d1.verdict == d2.verdict);
        CHECK(intersection_dim(p, q, a, a).verdict == DimVerdict::OneDimensional);
    }
}

TEST_CASE("witness divides both pullbacks") {
    BiPoly p = (X + Y) * (X + Y), q = X + Y * Rat(2);
    // partners with b1' - b1 = 2 (b2' - b2) share a component
    CurveParams a{Rat(1), Rat(1)}, b{Rat(3), Rat(2)};
    auto d = intersection_dim(p, q, a, b);
    REQUIRE(d.verdict == DimVerdict::OneDimensional);
    BiPoly f = BiPoly::from_x(p.section_y(a.b1)) - BiPoly::from_y(p.section_y(b.b1));
    BiPoly gq = BiPoly::from_x(q.section_y(a.b2)) - BiPoly::from_y(q.section_y(b.b2));
    CHECK(f.divide_exact(*d.witness).has_value());
    CHECK(gq.divide_exact(*d.witness).has_value());
}

TEST_CASE("scatter probe on the sum-product pair") {
    auto rep = scatter_probe(X + Y, X * Y, range(1, 8));
    CHECK(rep.grid.size() == 64);
    CHECK(rep.max_count == 0);
    CHECK(rep.scattered);
    CHECK(rep.excluded.empty());
}

TEST_CASE("scatter probe sees the shared line family") {
    auto rep = scatter_probe(X + Y, X + Y, range(1, 8));
    // every partner (c, c + const) shares the line; count 7 at each point
    CHECK(rep.max_count >= 7);
}

TEST_CASE("counts grow for a structured pair") {
    BiPoly p = (X + Y) * (X + Y), q = X + Y * Rat(2);
    int prev = 0;
    for (int hi : {8, 12, 16}) {
        auto rep = scatter_probe(p, q, range(1, hi));
        CHECK(rep.max_count > prev);
        prev = rep.max_count;
    }
}

TEST_CASE("degenerate values are excluded, not fatal") {
    // Q = x*y degenerates at b2 = 0
    auto rep = scatter_probe(X + Y, X * Y, range(0, 4));
    REQUIRE(rep.excluded.size() == 1);
    CHECK(rep.excluded[0].b == 0);
    CHECK(rep.excluded[0].for_p == false);
    CHECK(static_cast<int>(rep.excluded.size()) <=
          (X + Y).total_degree() + (X * Y).total_degree());
    CHECK(rep.grid.size() == 5 * 4);
    CHECK_THROWS_AS(scatter_probe(X + Y, X * Y, {}), precondition_error);
}

TEST_CASE("threshold is configurable") {
    auto rep = scatter_probe(X + Y, X + Y, range(1, 8), 3);
    CHECK(rep.threshold == 3);
    CHECK(!rep.scattered);
}
