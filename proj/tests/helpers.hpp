#pragma once

#include <random>
#include <vector>

#include "erpoly/bipoly.hpp"

namespace erpoly::testing {

// Deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rat coefficient(long bound = 9) { return Rat(integer(-bound, bound)); }

    // Random polynomial of exact degree deg (nonzero leading coefficient).
    UniPoly unipoly(int deg, long bound = 9) {
        std::vector<Rat> c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = coefficient(bound);
        do c[deg] = coefficient(bound); while (c[deg] == 0);
        return UniPoly(c);
    }

    // Random nonzero polynomial with deg_x, deg_y bounded (not exact).
    BiPoly bipoly(int max_dx, int max_dy, long bound = 9) {
        while (true) {
            BiPoly p;
            for (int i = 0; i <= max_dx; ++i)
                for (int j = 0; j <= max_dy; ++j)
                    if (integer(0, 2) != 0)
                        p += BiPoly::monomial(coefficient(bound), i, j);
            if (!p.is_zero()) return p;
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Determinant by Bareiss fraction-free elimination; entries stay polynomial
// because every division is exact.
inline UniPoly poly_det(std::vector<std::vector<UniPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return UniPoly::one();
    UniPoly prev = UniPoly::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return UniPoly::zero();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = *num.divide_exact(prev);
            }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Resultant of f and g with respect to y: determinant of the Sylvester
// matrix over Q[x]. Requires positive y-degree on both sides.
inline UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    const int m = f.deg_y(), n = g.deg_y();
    const std::size_t size = m + n;
    std::vector<std::vector<UniPoly>> s(size,
                                        std::vector<UniPoly>(size, UniPoly::zero()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = f.y_coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.y_coeff(n - i);
    return poly_det(std::move(s));
}

// Oracle for "gcd_bi(f, g) is nonconstant": some common factor has positive
// degree in y (resultant in y vanishes) or positive degree in x.
inline bool oracle_common_factor(const BiPoly& f, const BiPoly& g) {
    if (f.deg_y() >= 1 && g.deg_y() >= 1 && resultant_y(f, g).is_zero())
        return true;
    BiPoly fs = f.swap_vars(), gs = g.swap_vars();
    if (fs.deg_y() >= 1 && gs.deg_y() >= 1 && resultant_y(fs, gs).is_zero())
        return true;
    return false;
}

}  // namespace erpoly::testing
