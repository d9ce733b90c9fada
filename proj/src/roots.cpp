#include "erpoly/roots.hpp"

#include <algorithm>
#include <deque>

#include "erpoly/errors.hpp"

namespace erpoly {

namespace {

int sgn(const Rat& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }

// q(a + (b-a)x): maps (0,1) onto (a,b).
UniPoly map_unit_interval(const UniPoly& q, const Rat& a, const Rat& b) {
    UniPoly inner({std::vector<Rat>{a, b - a}});
    return q.compose(inner);
}

UniPoly reverse_coeffs(const UniPoly& q) {
    std::vector<Rat> v(q.coeffs().rbegin(), q.coeffs().rend());
    return UniPoly(std::move(v));
}

// p(x + 1) by iterated synthetic division.
UniPoly taylor_shift_one(const UniPoly& p) {
    std::vector<Rat> c = p.coeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        for (std::size_t j = c.size() - 1; j > i; --j)
            c[j - 1] += c[j];
    return UniPoly(std::move(c));
}

int sign_variations(const UniPoly& p) {
    int count = 0, last = 0;
    for (const auto& c : p.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Cauchy bound: all real roots lie strictly inside (-B, B).
Rat root_bound(const UniPoly& p) {
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, rat_abs(p.coeff(i) / p.leading()));
    return m + 2;
}

struct IsolationRun {
    std::vector<Rat> exact;
    std::vector<RootInterval> brackets;  // sign-change intervals, non-root ends
    bool restart = false;                // hit a rational root at a midpoint
    Rat deflate_at;
};

IsolationRun run_isolation(const UniPoly& sf, const Rat& bound) {
    IsolationRun out;
    if (sf.degree() < 1) return out;
    std::deque<std::pair<Rat, Rat>> work;
    work.emplace_back(-bound, bound);
    while (!work.empty()) {
        auto [lo, hi] = work.front();
        work.pop_front();
        int v = descartes_variations(sf, lo, hi);
        if (v == 0) continue;
        if (v == 1) {
            out.brackets.push_back({lo, hi, true});
            continue;
        }
        Rat mid = (lo + hi) / 2;
        if (sf.eval(mid) == 0) {
            out.restart = true;
            out.deflate_at = mid;
            return out;
        }
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    return out;
}

// One bisection step on a sign-change bracket; collapses to a point when the
// midpoint happens to be the root.
RootInterval bisect_once(const UniPoly& sf, const RootInterval& r) {
    if (r.is_exact()) return r;
    Rat mid = r.midpoint();
    Rat fm = sf.eval(mid);
    if (fm == 0) return {mid, mid, true};
    if (sgn(sf.eval(r.lo)) != sgn(fm)) return {r.lo, mid, true};
    return {mid, r.hi, true};
}

bool contains(const RootInterval& r, const Rat& x) {
    return r.lo <= x && x <= r.hi;
}

}  // namespace

int descartes_variations(const UniPoly& q, const Rat& a, const Rat& b) {
    UniPoly t = map_unit_interval(q, a, b);
    return sign_variations(taylor_shift_one(reverse_coeffs(t)));
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero())
        throw precondition_error("isolate_real_roots: zero polynomial");
    UniPoly sf = squarefree_part(p);
    if (sf.degree() < 1) return {};

    Rat bound = root_bound(sf);
    std::vector<Rat> exact;
    std::vector<RootInterval> brackets;
    // Rational roots hit at bisection midpoints are peeled off and isolation
    // restarts on the deflated polynomial.
    UniPoly cur = sf;
    for (;;) {
        IsolationRun run = run_isolation(cur, bound);
        if (!run.restart) {
            brackets = std::move(run.brackets);
            break;
        }
        exact.push_back(run.deflate_at);
        UniPoly lin({std::vector<Rat>{-run.deflate_at, Rat(1)}});
        cur = *cur.divide_exact(lin);
    }

    // Shrink brackets until they exclude the peeled exact roots and are
    // strictly disjoint from one another.
    for (auto& br : brackets) {
        for (const auto& r : exact)
            while (!br.is_exact() && contains(br, r)) br = bisect_once(cur, br);
    }
    std::vector<RootInterval> all;
    all.reserve(exact.size() + brackets.size());
    for (const auto& r : exact) all.push_back({r, r, true});
    for (auto& br : brackets) all.push_back(br);
    std::sort(all.begin(), all.end(),
              [](const RootInterval& x, const RootInterval& y) {
                  return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
              });
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        while (all[i + 1].lo <= all[i].hi && !all[i + 1].is_exact())
            all[i + 1] = bisect_once(cur, all[i + 1]);
        while (all[i + 1].lo <= all[i].hi && !all[i].is_exact())
            all[i] = bisect_once(cur, all[i]);
    }
    return all;
}

RootInterval refine_root(const UniPoly& p, const RootInterval& r,
                         const Rat& target_width) {
    if (target_width <= 0)
        throw precondition_error("refine_root: width must be positive");
    UniPoly sf = squarefree_part(p);
    if (r.is_exact()) {
        if (sf.eval(r.lo) != 0)
            throw precondition_error("refine_root: point interval is not a root");
        return r;
    }
    if (sgn(sf.eval(r.lo)) * sgn(sf.eval(r.hi)) >= 0)
        throw precondition_error(
            "refine_root: interval does not bracket a sign change");
    RootInterval cur = r;
    while (!cur.is_exact() && cur.width() > target_width)
        cur = bisect_once(sf, cur);
    return cur;
}

}  // namespace erpoly
