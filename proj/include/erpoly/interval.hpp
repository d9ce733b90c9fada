#pragma once

#include <algorithm>

#include "erpoly/bipoly.hpp"

namespace erpoly {

/// Closed rational interval; the basic cell for certified evaluation.
struct Interval {
    Rat lo, hi;

    static Interval point(const Rat& v) { return {v, v}; }
    Rat width() const { return hi - lo; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

inline Interval operator*(const Interval& a, const Rat& c) {
    return c >= 0 ? Interval{a.lo * c, a.hi * c} : Interval{a.hi * c, a.lo * c};
}

/// Horner evaluation of p over a box; encloses the exact range.
inline Interval eval_box(const UniPoly& p, const Interval& x) {
    Interval acc = Interval::point(Rat(0));
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + Interval::point(p.coeff(i));
    return acc;
}

inline Interval eval_box(const BiPoly& p, const Interval& x, const Interval& y) {
    Interval acc = Interval::point(Rat(0));
    for (int j = p.deg_y(); j >= 0; --j)
        acc = acc * y + eval_box(p.y_coeff(j), x);
    return acc;
}

}  // namespace erpoly
