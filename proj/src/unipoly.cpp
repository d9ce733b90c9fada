#include "erpoly/unipoly.hpp"

#include <algorithm>
#include <numeric>

#include "erpoly/errors.hpp"

namespace erpoly {

UniPoly::UniPoly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(Rat c, std::size_t k) {
    if (c == 0) return UniPoly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UniPoly::leading() const {
    if (is_zero()) throw precondition_error("leading(): zero polynomial");
    return coeffs_.back();
}

Rat UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v = coeffs_;
    for (auto& c : v) c = -c;
    UniPoly r;
    r.coeffs_ = std::move(v);
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> v = coeffs_;
    for (auto& c : v) c *= s;
    UniPoly r;
    r.coeffs_ = std::move(v);
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (divisor.is_zero())
        throw precondition_error("divrem: division by zero polynomial");
    UniPoly r = *this;
    if (r.degree() < divisor.degree()) return {UniPoly(), r};
    std::vector<Rat> q(r.coeffs_.size() - divisor.coeffs_.size() + 1, Rat(0));
    const Rat& lead = divisor.leading();
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        std::size_t shift = r.degree() - divisor.degree();
        Rat c = r.leading() / lead;
        q[shift] = c;
        // r -= c * x^shift * divisor
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            r.coeffs_[i + shift] -= c * divisor.coeffs_[i];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::one(), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rat(i);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::antiderivative() const {
    if (is_zero()) return UniPoly();
    std::vector<Rat> v(coeffs_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i + 1] = coeffs_[i] / Rat(i + 1);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw precondition_error("monic(): zero polynomial");
    return *this * (Rat(1) / leading());
}

Rat UniPoly::one_norm() const {
    Rat s = 0;
    for (const auto& c : coeffs_) s += rat_abs(c);
    return s;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeffs_[i];
        if (c == 0) continue;
        bool leading_term = out.empty();
        if (leading_term) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Rat a = rat_abs(c);
        // A bare leading "-x^k" would reparse as (-x)^k under the grammar
        // (unary minus is an atom), so spell out the unit coefficient there.
        bool need_coeff =
            (a != 1) || i == 0 || (leading_term && c < 0 && i > 1);
        if (need_coeff) out += rat_to_string(a);
        if (i > 0) {
            if (need_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

// Integer content and primitive part helpers for the primitive-PRS gcd.
Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Scale to an integer polynomial with content 1 and positive leading
// coefficient; returned coefficients are the primitive integer ones.
std::vector<Int> primitive_int_coeffs(const UniPoly& p) {
    Int den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        Int d = rat_den(c);
        den_lcm = den_lcm / int_gcd(den_lcm, d) * d;
    }
    std::vector<Int> v(p.coeffs().size());
    Int content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = rat_num(p.coeffs()[i]) * (den_lcm / rat_den(p.coeffs()[i]));
        content = int_gcd(content, v[i]);
    }
    if (content == 0) return v;
    if (v.back() < 0) content = -content;
    for (auto& x : v) x /= content;
    return v;
}

}  // namespace

UniPoly gcd_uni(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw precondition_error("gcd_uni: both inputs zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    std::vector<Int> u = primitive_int_coeffs(a);
    std::vector<Int> v = primitive_int_coeffs(b);
    if (u.size() < v.size()) std::swap(u, v);

    // Primitive pseudo-remainder sequence over Z; v holds the gcd on exit.
    while (v.size() > 1) {
        // r = lc(v)^(du-dv+1) * u  mod v
        std::vector<Int> r = u;
        const Int lead = v.back();
        std::size_t passes = u.size() - v.size() + 1;
        for (std::size_t pass = 0; pass < passes && r.size() >= v.size(); ++pass) {
            Int c = r.back();
            std::size_t shift = r.size() - v.size();
            for (auto& x : r) x *= lead;
            for (std::size_t i = 0; i < v.size(); ++i)
                r[i + shift] -= c * v[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        if (r.empty()) break;  // v divides u
        // primitive part
        Int content = 0;
        for (const auto& x : r) content = int_gcd(content, x);
        if (r.back() < 0) content = -content;
        for (auto& x : r) x /= content;
        u = std::move(v);
        v = std::move(r);
    }
    if (v.size() <= 1) {
        // Constant remainder: the primitive parts are coprime.
        return UniPoly::one();
    }
    std::vector<Rat> coeffs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) coeffs[i] = Rat(v[i]);
    return UniPoly(std::move(coeffs)).monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw precondition_error("squarefree_part: zero input");
    if (p.is_constant()) return UniPoly::one();
    UniPoly g = gcd_uni(p, p.derivative());
    auto q = p.divide_exact(g);
    return q->monic();
}

std::optional<UniPoly> nth_root(const UniPoly& p, unsigned n) {
    if (p.is_zero() || p.is_constant() || p.leading() != 1)
        throw precondition_error("nth_root: input must be monic nonconstant");
    if (n == 0) throw precondition_error("nth_root: n must be >= 1");
    if (n == 1) return p;
    if (p.degree() % n != 0) return std::nullopt;
    std::size_t m = p.degree() / n;

    // Determine q = x^m + a_{m-1} x^{m-1} + ... from the leading end: the
    // coefficient of x^{nm-k} in q^n is n*a_{m-k} plus terms in higher a's.
    std::vector<Rat> qc(m + 1, Rat(0));
    qc[m] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        UniPoly trial = UniPoly(qc).pow(n);
        Rat gap = p.coeff(n * m - k) - trial.coeff(n * m - k);
        qc[m - k] = gap / Rat(n);
    }
    UniPoly q{std::vector<Rat>(qc)};
    if (q.pow(n) == p) return q;
    return std::nullopt;
}

}  // namespace erpoly
