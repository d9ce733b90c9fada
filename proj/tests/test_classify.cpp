#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erpoly/classify.hpp"
#include "erpoly/errors.hpp"
#include "helpers.hpp"

using namespace erpoly;
using erpoly::testing::Gen;

namespace {
UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.push_back(Rat(c));
    return UniPoly(v);
}
const BiPoly X = BiPoly::monomial(Rat(1), 1, 0);
const BiPoly Y = BiPoly::monomial(Rat(1), 0, 1);

UniPoly canonical_inner(Gen& g, int deg) {
    std::vector<Rat> c(deg + 1);
    c[0] = 0;
    for (int i = 1; i < deg; ++i) c[i] = g.coefficient();
    c[deg] = 1;
    return UniPoly(c);
}
}  // namespace

TEST_CASE("additive pair example") {
    BiPoly p = (X * X + Y * Y * Y) * (X * X + Y * Y * Y);
    BiPoly q = X * X - Y * Y * Y + BiPoly(Rat(5));
    auto c = classify_pair(p, q);
    REQUIRE(c.verdict == Verdict::AdditivePair);
    const auto& a = *c.additive;
    CHECK(a.f == up({0, 0, 1}));
    CHECK(a.g == up({5, 1}));
    CHECK(a.u == up({0, 0, 1}));
    CHECK(a.v == up({0, 0, 0, 1}));
    CHECK(a.gamma1 == 1);
    CHECK(a.delta1 == 1);
    CHECK(a.gamma2 == 1);
    CHECK(a.delta2 == -1);
}

TEST_CASE("multiplicative pair example") {
    BiPoly p = X * X * Y * Y + X * Y * Rat(2) + BiPoly(Rat(1));
    BiPoly q = X.pow(4) * Y * Y;
    auto c = classify_pair(p, q);
    REQUIRE(c.verdict == Verdict::MultiplicativePair);
    const auto& m = *c.multiplicative;
    CHECK(m.f == up({1, 2, 1}));
    CHECK(m.g == up({0, 0, 1}));
    CHECK(m.u == up({0, 1}));
    CHECK(m.v == up({0, 1}));
    CHECK(m.m1 == 1);
    CHECK(m.n1 == 1);
    CHECK(m.m2 == 2);
    CHECK(m.n2 == 1);
}

TEST_CASE("sum-product pair is expanding") {
    CHECK(classify_pair(X + Y, X * Y).verdict == Verdict::ExpandingCandidate);
    CHECK(classify_pair(X + Y, X * Y + X).verdict == Verdict::ExpandingCandidate);
}

TEST_CASE("structured on different bases is still expanding") {
    // both additive, but inner bases differ
    BiPoly p = (X + Y) * (X + Y);
    BiPoly q = X * X + Y;
    CHECK(classify_pair(p, q).verdict == Verdict::ExpandingCandidate);
    // additive vs multiplicative
    CHECK(classify_pair(X + Y, X * Y * X * Y).verdict ==
          Verdict::ExpandingCandidate);
}

TEST_CASE("trivial dependence throws") {
    CHECK_THROWS_AS(classify_pair(X + Y, X), trivial_dependence_error);
    CHECK_THROWS_AS(classify_symmetric(Y, X * Y), trivial_dependence_error);
}

TEST_CASE("exclusivity on random structured pairs") {
    Gen g(41);
    int additive_seen = 0, multiplicative_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly u = canonical_inner(g, static_cast<int>(g.integer(1, 3)));
        UniPoly v = canonical_inner(g, static_cast<int>(g.integer(1, 3)));
        UniPoly f = g.unipoly(static_cast<int>(g.integer(1, 2)));
        UniPoly h = g.unipoly(static_cast<int>(g.integer(1, 2)));
        if (trial % 2 == 0) {
            BiPoly inner = BiPoly::from_x(u) + BiPoly::from_y(v);
            auto c = classify_pair(compose_uni_bi(f, inner), compose_uni_bi(h, inner));
            CHECK(c.verdict == Verdict::AdditivePair);
            CHECK(c.additive.has_value());
            CHECK(!c.multiplicative.has_value());
            ++additive_seen;
        } else {
            if (std::gcd(primitive_base(u).exponent, primitive_base(v).exponent) >= 2)
                continue;
            BiPoly inner = BiPoly::from_x(u) * BiPoly::from_y(v);
            auto c = classify_pair(compose_uni_bi(f, inner), compose_uni_bi(h, inner));
            CHECK(c.verdict == Verdict::MultiplicativePair);
            CHECK(c.multiplicative.has_value());
            CHECK(!c.additive.has_value());
            ++multiplicative_seen;
        }
    }
    CHECK(additive_seen >= 15);
    CHECK(multiplicative_seen >= 10);
}

TEST_CASE("symmetric additive example") {
    BiPoly p = X * X + Y * Y;
    BiPoly q = X * X * Rat(3) + Y * Y * Rat(5) + BiPoly(Rat(1));
    auto c = classify_symmetric(p, q);
    REQUIRE(c.verdict == Verdict::AdditivePair);
    const auto& a = *c.additive;
    CHECK(a.u == up({0, 0, 1}));
    CHECK(a.f == up({0, 1}));
    CHECK(a.g == up({1, 1}));
    CHECK(a.gamma1 == 1);
    CHECK(a.delta1 == 1);
    CHECK(a.gamma2 == 3);
    CHECK(a.delta2 == 5);
}

TEST_CASE("symmetric multiplicative example") {
    BiPoly p = X * X * Y.pow(4) + BiPoly(Rat(1));
    BiPoly q = X.pow(4) * Y * Y;
    auto c = classify_symmetric(p, q);
    REQUIRE(c.verdict == Verdict::MultiplicativePair);
    const auto& m = *c.multiplicative;
    CHECK(m.u == up({0, 1}));
    CHECK(m.f == up({1, 0, 1}));
    CHECK(m.g == up({0, 0, 1}));
    CHECK(m.m1 == 1);
    CHECK(m.n1 == 2);
    CHECK(m.m2 == 2);
    CHECK(m.n2 == 1);
}

TEST_CASE("symmetric rejects mismatched bases") {
    // pairwise additive with u != v, so no common symmetric base
    BiPoly p = X * X + Y * Y * Y;
    BiPoly q = X * X - Y * Y * Y;
    CHECK(classify_pair(p, q).verdict == Verdict::AdditivePair);
    CHECK(classify_symmetric(p, q).verdict == Verdict::ExpandingCandidate);
}

TEST_CASE("classify_single") {
    auto c = classify_single(X * X * Y * Y * Y);
    REQUIRE(c.verdict == Verdict::MultiplicativePair);
    CHECK(c.multiplicative->u == up({0, 1}));
    CHECK(c.multiplicative->f == up({0, 1}));
    CHECK(c.multiplicative->m1 == 2);
    CHECK(c.multiplicative->n1 == 3);
    auto c2 = classify_single((X + Y) * (X + Y) + X + Y);
    REQUIRE(c2.verdict == Verdict::AdditivePair);
    CHECK(c2.additive->u == up({0, 1}));
    CHECK(c2.additive->f == up({0, 1, 1}));
    CHECK(classify_single(X * Y + X).verdict == Verdict::ExpandingCandidate);
}
