#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erpoly/errors.hpp"
#include "erpoly/unipoly.hpp"
#include "helpers.hpp"

using namespace erpoly;
using erpoly::testing::Gen;

namespace {
UniPoly up(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.push_back(Rat(c));
    return UniPoly(v);
}
}  // namespace

TEST_CASE("degree and trimming") {
    CHECK(UniPoly::zero().degree() == -1);
    CHECK(UniPoly(Rat(5)).degree() == 0);
    CHECK(UniPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
    CHECK(up({0, 0, 3}).degree() == 2);
    CHECK(up({0, 0, 3}).leading() == 3);
}

TEST_CASE("ring axioms on random inputs") {
    Gen g(1);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly a = g.unipoly(g.integer(0, 5));
        UniPoly b = g.unipoly(g.integer(0, 5));
        UniPoly c = g.unipoly(g.integer(0, 5));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("division invariant") {
    Gen g(2);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly a = g.unipoly(g.integer(0, 6));
        UniPoly b = g.unipoly(g.integer(1, 4));
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(up({1, 1}).divrem(UniPoly::zero()), precondition_error);
}

TEST_CASE("exact division") {
    Gen g(3);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly a = g.unipoly(g.integer(0, 4));
        UniPoly b = g.unipoly(g.integer(1, 4));
        auto q = (a * b).divide_exact(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK(!up({1, 1, 1}).divide_exact(up({0, 1})).has_value());
}

TEST_CASE("gcd divides and is monic") {
    Gen g(4);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly d = g.unipoly(g.integer(0, 3));
        UniPoly a = g.unipoly(g.integer(0, 3)) * d;
        UniPoly b = g.unipoly(g.integer(0, 3)) * d;
        if (a.is_zero() && b.is_zero()) continue;
        UniPoly h = gcd_uni(a, b);
        if (!a.is_zero()) CHECK(a.divide_exact(h).has_value());
        if (!b.is_zero()) CHECK(b.divide_exact(h).has_value());
        // The constructed common factor must divide the gcd.
        if (!d.is_zero() && !d.is_constant() && !a.is_zero() && !b.is_zero())
            CHECK(h.divide_exact(d.monic()).has_value());
        if (!h.is_zero()) CHECK(h.leading() == 1);
    }
    CHECK(gcd_uni(up({-1, 0, 1}), up({1, 1})) == up({1, 1}));
    CHECK(gcd_uni(up({1, 1}), up({1, 2})) == UniPoly::one());
}

TEST_CASE("coprime after dividing out the gcd") {
    Gen g(5);
    for (int trial = 0; trial < 25; ++trial) {
        UniPoly a = g.unipoly(g.integer(1, 4));
        UniPoly b = g.unipoly(g.integer(1, 4));
        UniPoly h = gcd_uni(a, b);
        UniPoly a1 = *a.divide_exact(h);
        UniPoly b1 = *b.divide_exact(h);
        CHECK(gcd_uni(a1, b1) == UniPoly::one());
    }
}

TEST_CASE("squarefree part strips multiplicity") {
    UniPoly p = up({1, 1}) * up({1, 1}) * up({-2, 1});
    CHECK(squarefree_part(p) == (up({1, 1}) * up({-2, 1})).monic());
    Gen g(6);
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly a = g.unipoly(g.integer(1, 3));
        UniPoly sf = squarefree_part(a * a);
        CHECK(gcd_uni(sf, sf.derivative()) == UniPoly::one());
        CHECK((a * a).divide_exact(sf).has_value());
    }
}

TEST_CASE("composition and evaluation agree") {
    Gen g(7);
    for (int trial = 0; trial < 25; ++trial) {
        UniPoly f = g.unipoly(g.integer(0, 4));
        UniPoly h = g.unipoly(g.integer(0, 3));
        Rat x0 = g.coefficient(5);
        CHECK(f.compose(h).eval(x0) == f.eval(h.eval(x0)));
    }
}

TEST_CASE("derivative and antiderivative are inverse") {
    Gen g(8);
    for (int trial = 0; trial < 25; ++trial) {
        UniPoly f = g.unipoly(g.integer(0, 5));
        CHECK(f.antiderivative().derivative() == f);
        UniPoly ad = f.derivative().antiderivative();
        CHECK(ad == f - UniPoly(f.coeff(0)));
    }
}

TEST_CASE("nth_root recovers powers and rejects non-powers") {
    Gen g(9);
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly b = g.unipoly(g.integer(1, 3)).monic();
        unsigned n = static_cast<unsigned>(g.integer(2, 4));
        auto r = nth_root(b.pow(n), n);
        REQUIRE(r.has_value());
        CHECK(*r == b);
    }
    CHECK(!nth_root(up({1, 0, 1}), 2).has_value());
    CHECK(!nth_root(up({1, 1, 1}), 2).has_value());
}

TEST_CASE("printing reparses (lexical round trip)") {
    CHECK(up({5, -1, 0, 3}).to_string() == "3*x^3 - x + 5");
    CHECK(up({0, 0, 1}).to_string("z") == "z^2");
    CHECK(UniPoly(Rat(3) / 2).to_string() == "3/2");
    CHECK(UniPoly::zero().to_string() == "0");
}
