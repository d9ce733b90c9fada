#include "erpoly/bipoly.hpp"

#include <algorithm>

#include "erpoly/errors.hpp"

namespace erpoly {

BiPoly::BiPoly(Rat constant) {
    if (constant != 0) yc_.push_back(UniPoly(std::move(constant)));
}

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : yc_(std::move(y_coeffs)) {
    trim();
}

BiPoly BiPoly::from_x(const UniPoly& p) {
    if (p.is_zero()) return BiPoly();
    return BiPoly(std::vector<UniPoly>{p});
}

BiPoly BiPoly::from_y(const UniPoly& p) {
    std::vector<UniPoly> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(UniPoly(c));
    return BiPoly(std::move(v));
}

BiPoly BiPoly::monomial(Rat c, std::size_t i, std::size_t j) {
    if (c == 0) return BiPoly();
    std::vector<UniPoly> v(j + 1);
    v[j] = UniPoly::monomial(std::move(c), i);
    return BiPoly(std::move(v));
}

void BiPoly::trim() {
    while (!yc_.empty() && yc_.back().is_zero()) yc_.pop_back();
}

bool BiPoly::is_constant() const {
    return yc_.empty() || (yc_.size() == 1 && yc_[0].is_constant());
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& c : yc_) d = std::max(d, c.degree());
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (std::size_t j = 0; j < yc_.size(); ++j)
        if (!yc_[j].is_zero())
            d = std::max(d, yc_[j].degree() + static_cast<int>(j));
    return d;
}

Rat BiPoly::constant_value() const {
    if (!is_constant())
        throw precondition_error("constant_value: polynomial is not constant");
    return yc_.empty() ? Rat(0) : yc_[0].coeff(0);
}

UniPoly BiPoly::y_coeff(std::size_t j) const {
    return j < yc_.size() ? yc_[j] : UniPoly();
}

UniPoly BiPoly::x_coeff(std::size_t i) const {
    std::vector<Rat> v(yc_.size(), Rat(0));
    for (std::size_t j = 0; j < yc_.size(); ++j) v[j] = yc_[j].coeff(i);
    return UniPoly(std::move(v));
}

Rat BiPoly::coeff(std::size_t i, std::size_t j) const {
    return j < yc_.size() ? yc_[j].coeff(i) : Rat(0);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UniPoly> v(std::max(yc_.size(), o.yc_.size()));
    for (std::size_t j = 0; j < yc_.size(); ++j) v[j] = yc_[j];
    for (std::size_t j = 0; j < o.yc_.size(); ++j) v[j] += o.yc_[j];
    return BiPoly(std::move(v));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
    std::vector<UniPoly> v = yc_;
    for (auto& c : v) c = -c;
    return BiPoly(std::move(v));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<UniPoly> v(yc_.size() + o.yc_.size() - 1);
    for (std::size_t i = 0; i < yc_.size(); ++i)
        for (std::size_t j = 0; j < o.yc_.size(); ++j)
            v[i + j] += yc_[i] * o.yc_[j];
    return BiPoly(std::move(v));
}

BiPoly BiPoly::operator*(const Rat& s) const {
    std::vector<UniPoly> v = yc_;
    for (auto& c : v) c = c * s;
    return BiPoly(std::move(v));
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r = BiPoly::one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BiPoly BiPoly::derivative_x() const {
    std::vector<UniPoly> v = yc_;
    for (auto& c : v) c = c.derivative();
    return BiPoly(std::move(v));
}

BiPoly BiPoly::derivative_y() const {
    if (yc_.size() <= 1) return BiPoly();
    std::vector<UniPoly> v(yc_.size() - 1);
    for (std::size_t j = 1; j < yc_.size(); ++j) v[j - 1] = yc_[j] * Rat(j);
    return BiPoly(std::move(v));
}

Rat BiPoly::eval(const Rat& x0, const Rat& y0) const {
    Rat acc = 0;
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it)
        acc = acc * y0 + it->eval(x0);
    return acc;
}

UniPoly BiPoly::section_y(const Rat& y0) const {
    UniPoly acc;
    for (auto it = yc_.rbegin(); it != yc_.rend(); ++it)
        acc = acc * y0 + *it;
    return acc;
}

UniPoly BiPoly::section_x(const Rat& x0) const {
    std::vector<Rat> v(yc_.size());
    for (std::size_t j = 0; j < yc_.size(); ++j) v[j] = yc_[j].eval(x0);
    return UniPoly(std::move(v));
}

BiPoly BiPoly::swap_vars() const {
    int dx = deg_x();
    if (dx < 0) return BiPoly();
    std::vector<UniPoly> v(dx + 1);
    for (int i = 0; i <= dx; ++i) v[i] = x_coeff(i);
    return BiPoly(std::move(v));
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& divisor) const {
    if (divisor.is_zero())
        throw precondition_error("divide_exact: zero divisor");
    BiPoly r = *this;
    std::vector<UniPoly> q(
        std::max<int>(0, deg_y() - divisor.deg_y() + 1));
    const UniPoly& lead = divisor.yc_.back();
    while (!r.is_zero() && r.deg_y() >= divisor.deg_y()) {
        auto c = r.yc_.back().divide_exact(lead);
        if (!c) return std::nullopt;
        std::size_t shift = r.deg_y() - divisor.deg_y();
        q[shift] = *c;
        for (std::size_t j = 0; j < divisor.yc_.size(); ++j)
            r.yc_[j + shift] -= *c * divisor.yc_[j];
        r.trim();
    }
    if (!r.is_zero()) return std::nullopt;
    return BiPoly(std::move(q));
}

Rat BiPoly::leading_lex() const {
    if (is_zero()) throw precondition_error("leading_lex: zero polynomial");
    return yc_.back().leading();
}

std::string BiPoly::to_string(const std::string& xvar,
                              const std::string& yvar) const {
    if (is_zero()) return "0";
    std::string out;
    for (int j = deg_y(); j >= 0; --j) {
        const UniPoly& c = yc_[j];
        if (c.is_zero()) continue;
        std::string term;
        if (j == 0) {
            term = c.to_string(xvar);
        } else {
            if (c == UniPoly::one()) {
                term = yvar;
            } else if (c.is_constant()) {
                term = rat_to_string(c.coeff(0)) + "*" + yvar;
            } else {
                term = "(" + c.to_string(xvar) + ")*" + yvar;
            }
            if (j > 1) term += "^" + std::to_string(j);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

std::pair<BiPoly, BiPoly> partials(const BiPoly& p) {
    return {p.derivative_x(), p.derivative_y()};
}

namespace {

// x-content: gcd of the y-coefficients, monic. Zero polynomial maps to 0.
UniPoly content_x(const BiPoly& p) {
    UniPoly g;
    for (const auto& c : p.y_coeffs()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_uni(g, c);
        if (g == UniPoly::one()) break;
    }
    return g;
}

BiPoly divide_by_uni_x(const BiPoly& p, const UniPoly& d) {
    std::vector<UniPoly> v;
    v.reserve(p.y_coeffs().size());
    for (const auto& c : p.y_coeffs()) {
        if (c.is_zero()) {
            v.push_back(UniPoly());
            continue;
        }
        auto q = c.divide_exact(d);
        if (!q) throw precondition_error("divide_by_uni_x: inexact division");
        v.push_back(*q);
    }
    return BiPoly(std::move(v));
}

// Primitive pseudo-remainder sequence in (Q[x])[y]. Inputs must be primitive
// with deg_y >= 1; returns the primitive gcd, or a constant-in-y marker.
BiPoly primitive_prs(BiPoly u, BiPoly v) {
    if (u.deg_y() < v.deg_y()) std::swap(u, v);
    while (v.deg_y() >= 1) {
        BiPoly r = u;
        const UniPoly lead = v.y_coeffs().back();
        int passes = u.deg_y() - v.deg_y() + 1;
        for (int pass = 0; pass < passes && r.deg_y() >= v.deg_y(); ++pass) {
            UniPoly c = r.y_coeffs().back();
            std::size_t shift = r.deg_y() - v.deg_y();
            std::vector<UniPoly> rc = r.y_coeffs();
            for (auto& x : rc) x *= lead;
            for (std::size_t j = 0; j < v.y_coeffs().size(); ++j)
                rc[j + shift] -= c * v.y_coeffs()[j];
            r = BiPoly(std::move(rc));
        }
        if (r.is_zero()) return v;  // v divides u
        r = divide_by_uni_x(r, content_x(r));
        u = std::move(v);
        v = std::move(r);
    }
    // Constant-in-y remainder: primitive parts coprime.
    return BiPoly::one();
}

}  // namespace

BiPoly gcd_bi(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() && g.is_zero())
        throw precondition_error("gcd_bi: both inputs zero");
    if (f.is_zero()) return g * (Rat(1) / g.leading_lex());
    if (g.is_zero()) return f * (Rat(1) / f.leading_lex());

    UniPoly cf = content_x(f);
    UniPoly cg = content_x(g);
    BiPoly pf = divide_by_uni_x(f, cf);
    BiPoly pg = divide_by_uni_x(g, cg);
    UniPoly c = gcd_uni(cf, cg);

    BiPoly pp_gcd;
    if (f.deg_y() == 0 || g.deg_y() == 0) {
        // One input free of y: it shares only x-content with the other.
        pp_gcd = BiPoly::one();
    } else {
        pp_gcd = primitive_prs(pf, pg);
    }
    BiPoly result = BiPoly::from_x(c) * pp_gcd;
    return result * (Rat(1) / result.leading_lex());
}

std::optional<std::pair<UniPoly, UniPoly>> separate_product(const BiPoly& n) {
    if (n.is_zero()) throw precondition_error("separate_product: zero input");
    UniPoly a = content_x(n);
    std::vector<Rat> b(n.y_coeffs().size(), Rat(0));
    for (std::size_t j = 0; j < n.y_coeffs().size(); ++j) {
        const UniPoly& c = n.y_coeffs()[j];
        if (c.is_zero()) continue;
        auto q = c.divide_exact(a);
        if (!q || !q->is_constant()) return std::nullopt;
        b[j] = q->coeff(0);
    }
    return std::make_pair(a, UniPoly(std::move(b)));
}

std::optional<UniPoly> reduce_in_powers(const BiPoly& p, const BiPoly& w) {
    if (w.is_constant())
        throw precondition_error("reduce_in_powers: constant inner polynomial");
    if (p.is_zero())
        throw precondition_error("reduce_in_powers: zero polynomial");
    if (w.deg_x() < 1) {
        // Inner free of x: eliminate along y instead.
        return reduce_in_powers(p.swap_vars(), w.swap_vars());
    }
    const int dwx = w.deg_x();
    BiPoly r = p;
    std::vector<Rat> f;
    while (!r.is_constant()) {
        int dx = r.deg_x();
        if (dx == 0 || dx % dwx != 0) return std::nullopt;
        int k = dx / dwx;
        BiPoly wk = w.pow(static_cast<unsigned>(k));
        UniPoly head = wk.x_coeff(dx);       // (lc_x w)^k, a poly in y
        UniPoly target = r.x_coeff(dx);
        auto q = target.divide_exact(head);
        if (!q || !q->is_constant()) return std::nullopt;
        Rat ck = q->coeff(0);
        if (f.empty()) f.assign(k + 1, Rat(0));
        f[k] = ck;
        r -= wk * ck;
        if (!r.is_constant() && r.deg_x() >= dx) return std::nullopt;
    }
    if (f.empty()) f.assign(1, Rat(0));
    f[0] = r.constant_value();
    return UniPoly(std::move(f));
}

BiPoly compose_uni_bi(const UniPoly& f, const BiPoly& w) {
    BiPoly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * w + BiPoly(*it);
    return acc;
}

}  // namespace erpoly
