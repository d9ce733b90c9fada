#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "erpoly/rational.hpp"

namespace erpoly {

/// Dense univariate polynomial over Q. Coefficient i belongs to x^i; the
/// highest-index coefficient is nonzero unless the polynomial is zero, which
/// is represented by an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rat constant);
    explicit UniPoly(std::vector<Rat> coeffs);  // trims trailing zeros

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    // c * x^k
    static UniPoly monomial(Rat c, std::size_t k);
    static UniPoly variable() { return monomial(Rat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; -1 stands in for the zero polynomial's -infinity.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rat& leading() const;  // requires nonzero
    Rat coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Quotient and remainder with deg r < deg divisor. Throws on zero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;
    /// Exact quotient, or nullopt when the remainder is nonzero.
    std::optional<UniPoly> divide_exact(const UniPoly& divisor) const;

    UniPoly pow(unsigned e) const;
    Rat eval(const Rat& x) const;
    /// this(inner), expanded.
    UniPoly compose(const UniPoly& inner) const;

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly antiderivative() const;

    UniPoly monic() const;  // requires nonzero

    /// Sum of |coefficients|.
    Rat one_norm() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

inline UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

/// Monic gcd over Q via the primitive-part Euclidean algorithm.
/// Throws precondition_error when both inputs are zero.
UniPoly gcd_uni(const UniPoly& a, const UniPoly& b);

/// Monic product of the distinct irreducible factors: p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

/// Monic q with q^n = p, or nullopt. p must be monic and nonconstant.
std::optional<UniPoly> nth_root(const UniPoly& p, unsigned n);

}  // namespace erpoly
