#include "erpoly/harness.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <set>

#include "erpoly/errors.hpp"

namespace erpoly {

RealElem RealElem::algebraic(UniPoly squarefree, const RootInterval& r) {
    if (r.is_exact()) return from_rat(r.lo);
    return {Interval{r.lo, r.hi}, std::move(squarefree), false};
}

void RealElem::refine(const Rat& target_width) {
    if (exact || width() <= target_width) return;
    RootInterval r = refine_root(defining, {box.lo, box.hi}, target_width);
    box = {r.lo, r.hi};
}

namespace {

Int rat_floor(const Rat& v) {
    Int n = rat_num(v), d = rat_den(v);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Detects when an isolated root is in fact rational: linear defining
// polynomial, or an integer inside a tightened bracket.
std::optional<Rat> snap_rational(const UniPoly& sf, RootInterval* r) {
    if (r->is_exact()) return r->lo;
    if (sf.degree() == 1) return -sf.coeff(0) / sf.coeff(1);
    *r = refine_root(sf, *r, Rat(1) / 4);
    if (r->is_exact()) return r->lo;
    for (Int c = rat_floor(r->lo); Rat(c) <= r->hi; ++c)
        if (Rat(c) >= r->lo && sf.eval(Rat(c)) == 0) return Rat(c);
    return std::nullopt;
}

// Gathers one real preimage per reachable target value under `inner`.
class PreimageCollector {
public:
    PreimageCollector(UniPoly inner, bool allow_reflect)
        : inner_(std::move(inner)), allow_reflect_(allow_reflect) {}

    void try_target(const Rat& tau) {
        if (!add(tau) && allow_reflect_) add(-tau);
    }

    std::vector<RealElem>& elems() { return elems_; }

private:
    bool add(const Rat& tau) {
        if (achieved_.count(tau)) return true;
        UniPoly shifted = inner_ - UniPoly(tau);
        auto roots = isolate_real_roots(shifted);
        if (roots.empty()) return false;
        achieved_.insert(tau);
        // Any preimage works for the upper-bound construction; take the
        // largest, deterministically.
        UniPoly sf = squarefree_part(shifted);
        RootInterval r = roots.back();
        if (auto exact = snap_rational(sf, &r))
            elems_.push_back(RealElem::from_rat(*exact));
        else
            elems_.push_back(RealElem::algebraic(std::move(sf), r));
        return true;
    }

    UniPoly inner_;
    bool allow_reflect_;
    std::set<Rat> achieved_;
    std::vector<RealElem> elems_;
};

// Refine until brackets are pairwise separated by more than twice the widest
// bracket, then keep the n smallest.
void finalize_set(std::vector<RealElem>* elems, int n) {
    Rat w = Rat(1) / Rat(1024);
    for (int pass = 0; pass < 200; ++pass) {
        for (auto& e : *elems) e.refine(w);
        std::sort(elems->begin(), elems->end(),
                  [](const RealElem& a, const RealElem& b) {
                      return a.midpoint() < b.midpoint();
                  });
        Rat max_w(0);
        for (const auto& e : *elems) max_w = std::max(max_w, e.width());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < elems->size() && ok; ++i)
            ok = (*elems)[i + 1].box.lo - (*elems)[i].box.hi > 2 * max_w;
        if (ok) {
            elems->resize(n);
            return;
        }
        w /= 2;
    }
    throw precision_exhausted_error(
        "witness set separation could not be certified");
}

struct TargetGrid {
    Rat ca, cb;  // tau = ca * l + cb * l'
};

WitnessSets build_additive(const AdditivePairCert& cert, int n) {
    const unsigned cap = 64u * static_cast<unsigned>(n);
    TargetGrid ta{cert.gamma1 * cert.gamma2, cert.delta1 * cert.delta2};
    TargetGrid tb{cert.gamma1 * cert.delta2, cert.delta1 * cert.gamma2};
    PreimageCollector ca(cert.u, cert.u.degree() % 2 == 0);
    PreimageCollector cb(cert.v, cert.v.degree() % 2 == 0);
    WitnessSets ws;
    ws.n = n;
    for (unsigned k = 0;; ++k) {
        if (k > cap)
            throw unreachable_cardinality_error(
                "additive witness targets exhausted before reaching n");
        // Only the new shell max(l, l') == k.
        for (unsigned l = 0; l <= k; ++l) {
            ca.try_target(ta.ca * l + ta.cb * k);
            cb.try_target(tb.ca * l + tb.cb * k);
            if (l < k) {
                ca.try_target(ta.ca * k + ta.cb * l);
                cb.try_target(tb.ca * k + tb.cb * l);
            }
        }
        if (static_cast<int>(ca.elems().size()) >= n &&
            static_cast<int>(cb.elems().size()) >= n) {
            ws.k = k;
            break;
        }
    }
    ws.a = std::move(ca.elems());
    ws.b = std::move(cb.elems());
    finalize_set(&ws.a, n);
    finalize_set(&ws.b, n);
    return ws;
}

WitnessSets build_multiplicative(const MultiplicativePairCert& cert, int n) {
    const unsigned cap = 64u * static_cast<unsigned>(n);
    PreimageCollector ca(cert.u, false);
    PreimageCollector cb(cert.v, false);
    WitnessSets ws;
    ws.n = n;
    Rat pow2(1);
    for (unsigned k = 0;; ++k, pow2 *= 2) {
        if (k > cap)
            throw unreachable_cardinality_error(
                "multiplicative witness targets exhausted before reaching n");
        ca.try_target(pow2);
        cb.try_target(pow2);
        if (static_cast<int>(ca.elems().size()) >= n &&
            static_cast<int>(cb.elems().size()) >= n) {
            ws.k = k;
            break;
        }
    }
    ws.a = std::move(ca.elems());
    ws.b = std::move(cb.elems());
    finalize_set(&ws.a, n);
    finalize_set(&ws.b, n);
    return ws;
}

bool all_exact(const std::vector<RealElem>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const RealElem& e) { return e.exact; });
}

}  // namespace

WitnessSets build_witness_sets(const PairClassification& cls, int n) {
    if (n <= 0) throw precondition_error("build_witness_sets: n must be positive");
    if (cls.verdict == Verdict::AdditivePair)
        return build_additive(*cls.additive, n);
    if (cls.verdict == Verdict::MultiplicativePair)
        return build_multiplicative(*cls.multiplicative, n);
    throw precondition_error(
        "build_witness_sets: classification carries no certificate");
}

std::int64_t image_size(const BiPoly& p, std::vector<RealElem> a,
                        std::vector<RealElem> b, SizeMode mode,
                        const Rat& tolerance) {
    if (mode == SizeMode::Exact) {
        if (!all_exact(a) || !all_exact(b))
            throw precondition_error(
                "image_size: exact mode needs all-rational elements");
        std::set<Rat> vals;
        for (const auto& x : a)
            for (const auto& y : b) vals.insert(p.eval(x.box.lo, y.box.lo));
        return static_cast<std::int64_t>(vals.size());
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Interval> vals;
        vals.reserve(a.size() * b.size());
        for (const auto& x : a)
            for (const auto& y : b) vals.push_back(eval_box(p, x.box, y.box));
        std::sort(vals.begin(), vals.end(),
                  [](const Interval& u, const Interval& v) {
                      return u.lo < v.lo;
                  });
        std::int64_t clusters = 0;
        bool ambiguous = false;
        std::size_t i = 0;
        while (i < vals.size()) {
            Rat lo = vals[i].lo, hi = vals[i].hi;
            std::size_t j = i + 1;
            while (j < vals.size() && vals[j].lo <= hi) {
                hi = std::max(hi, vals[j].hi);
                ++j;
            }
            if (hi - lo > tolerance) ambiguous = true;
            ++clusters;
            i = j;
        }
        if (!ambiguous) return clusters;
        for (auto& e : a) e.refine(e.width() / 2);
        for (auto& e : b) e.refine(e.width() / 2);
    }
    throw precision_exhausted_error("image_size: certified merge did not settle");
}

ExpansionSeries run_series(const BiPoly& p, const BiPoly& q, SetFamily family,
                           const std::vector<int>& n_grid, std::uint64_t seed,
                           const Rat& tolerance) {
    if (n_grid.size() < 3)
        throw precondition_error("run_series: need at least three grid points");
    for (std::size_t i = 0; i < n_grid.size(); ++i)
        if (n_grid[i] < 1 || (i > 0 && n_grid[i] <= n_grid[i - 1]))
            throw precondition_error(
                "run_series: n_grid must be positive and strictly increasing");
    if (!p.depends_on_x() || !p.depends_on_y() || !q.depends_on_x() ||
        !q.depends_on_y())
        throw trivial_dependence_error(
            "run_series: polynomials must depend on both x and y");

    std::optional<PairClassification> cls;
    if (family == SetFamily::WitnessAdditive ||
        family == SetFamily::WitnessMultiplicative) {
        cls = classify_pair(p, q);
        Verdict want = family == SetFamily::WitnessAdditive
                           ? Verdict::AdditivePair
                           : Verdict::MultiplicativePair;
        if (cls->verdict != want)
            throw precondition_error(
                "run_series: pair does not match the requested witness family");
    }

    std::mt19937_64 rng(seed);
    ExpansionSeries series;
    series.family = family;
    for (int n : n_grid) {
        std::vector<RealElem> a, b;
        switch (family) {
            case SetFamily::WitnessAdditive:
            case SetFamily::WitnessMultiplicative: {
                WitnessSets ws = build_witness_sets(*cls, n);
                a = std::move(ws.a);
                b = std::move(ws.b);
                break;
            }
            case SetFamily::ArithmeticProgression:
                for (int i = 1; i <= n; ++i) a.push_back(RealElem::from_rat(Rat(i)));
                b = a;
                break;
            case SetFamily::GeometricProgression:
                for (int i = 0; i < n; ++i)
                    a.push_back(RealElem::from_rat(Rat(Int(1) << i)));
                b = a;
                break;
            case SetFamily::UniformRandom: {
                std::uniform_int_distribution<long long> dist(1, 1000003);
                std::set<long long> seen;
                while (static_cast<int>(seen.size()) < n) seen.insert(dist(rng));
                for (long long v : seen) a.push_back(RealElem::from_rat(Rat(v)));
                b = a;
                break;
            }
        }
        SizeMode mode = all_exact(a) && all_exact(b) ? SizeMode::Exact
                                                     : SizeMode::Certified;
        SeriesPoint pt;
        pt.n = n;
        pt.card_p = image_size(p, a, b, mode, tolerance);
        pt.card_q = image_size(q, a, b, mode, tolerance);
        pt.max_card = std::max(pt.card_p, pt.card_q);
        series.points.push_back(pt);
    }

    // Least-squares slope of log(max) against log(n), with R^2.
    const std::size_t m = series.points.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& pt : series.points) {
        double x = std::log(static_cast<double>(pt.n));
        double y = std::log(static_cast<double>(pt.max_card));
        sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
    }
    double dm = static_cast<double>(m);
    double cov = sxy - sx * sy / dm;
    double varx = sxx - sx * sx / dm;
    double vary = syy - sy * sy / dm;
    series.fitted_exponent = cov / varx;
    series.fit_r2 = vary > 0 ? (cov * cov) / (varx * vary) : 1.0;
    return series;
}

const char* family_name(SetFamily f) {
    switch (f) {
        case SetFamily::WitnessAdditive: return "witness_additive";
        case SetFamily::WitnessMultiplicative: return "witness_multiplicative";
        case SetFamily::ArithmeticProgression: return "ap";
        case SetFamily::GeometricProgression: return "gp";
        case SetFamily::UniformRandom: return "random";
    }
    return "?";
}

void write_csv(const ExpansionSeries& s, std::ostream& out) {
    out << "n,card_P,card_Q,max,family\n";
    for (const auto& pt : s.points)
        out << pt.n << ',' << pt.card_p << ',' << pt.card_q << ','
            << pt.max_card << ',' << family_name(s.family) << '\n';
    out << "# exponent=" << s.fitted_exponent << " r2=" << s.fit_r2 << '\n';
}

}  // namespace erpoly
