#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "erpoly/unipoly.hpp"

namespace erpoly {

/// Dense bivariate polynomial over Q in recursive form: a polynomial in y
/// whose coefficients are UniPoly in x. Trimmed so the top y-coefficient is
/// nonzero unless the whole polynomial is zero.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(Rat constant);
    explicit BiPoly(std::vector<UniPoly> y_coeffs);  // index j = coeff of y^j

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(Rat(1)); }
    static BiPoly from_x(const UniPoly& p);
    static BiPoly from_y(const UniPoly& p);
    // c * x^i * y^j
    static BiPoly monomial(Rat c, std::size_t i, std::size_t j);

    bool is_zero() const { return yc_.empty(); }
    bool is_constant() const;
    int deg_y() const { return static_cast<int>(yc_.size()) - 1; }
    int deg_x() const;
    int total_degree() const;

    bool depends_on_x() const { return deg_x() >= 1; }
    bool depends_on_y() const { return deg_y() >= 1; }

    /// Constant value; requires is_constant().
    Rat constant_value() const;

    const std::vector<UniPoly>& y_coeffs() const { return yc_; }
    UniPoly y_coeff(std::size_t j) const;
    /// Coefficient of x^i as a UniPoly in y.
    UniPoly x_coeff(std::size_t i) const;
    Rat coeff(std::size_t i, std::size_t j) const;  // of x^i y^j

    bool operator==(const BiPoly& o) const { return yc_ == o.yc_; }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& s) const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly pow(unsigned e) const;

    BiPoly derivative_x() const;
    BiPoly derivative_y() const;

    Rat eval(const Rat& x0, const Rat& y0) const;
    /// P(x, y0) as a polynomial in x.
    UniPoly section_y(const Rat& y0) const;
    /// P(x0, y) as a polynomial in y.
    UniPoly section_x(const Rat& x0) const;
    /// P(y, x).
    BiPoly swap_vars() const;

    /// Exact quotient in Q[x,y], or nullopt when the division is not exact.
    std::optional<BiPoly> divide_exact(const BiPoly& divisor) const;

    /// Leading rational coefficient in lexicographic (y, then x) term order.
    Rat leading_lex() const;

    std::string to_string(const std::string& xvar = "x",
                          const std::string& yvar = "y") const;

private:
    void trim();
    std::vector<UniPoly> yc_;
};

inline BiPoly operator*(const Rat& s, const BiPoly& p) { return p * s; }

/// (dP/dx, dP/dy).
std::pair<BiPoly, BiPoly> partials(const BiPoly& p);

/// GCD in Q[x,y], normalized to leading lex (y, then x) coefficient 1.
/// Subresultant-style primitive Euclidean algorithm over Q[x].
BiPoly gcd_bi(const BiPoly& f, const BiPoly& g);

/// Split N(x,y) = a(x) * b(y) with a monic, or nullopt when N is not a
/// product of univariate parts. The scalar rides with b.
std::optional<std::pair<UniPoly, UniPoly>> separate_product(const BiPoly& n);

/// f with f(w(x,y)) = P(x,y) exactly, or nullopt. Greedy elimination from
/// the leading x-power down.
std::optional<UniPoly> reduce_in_powers(const BiPoly& p, const BiPoly& w);

/// f(w) expanded.
BiPoly compose_uni_bi(const UniPoly& f, const BiPoly& w);

}  // namespace erpoly
