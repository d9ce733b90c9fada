#include "erpoly/decompose.hpp"

#include <numeric>
#include <vector>

#include "erpoly/errors.hpp"

namespace erpoly {

namespace {

void require_both_variables(const BiPoly& p, const char* who) {
    if (!p.depends_on_x() || !p.depends_on_y())
        throw trivial_dependence_error(
            std::string(who) + ": polynomial must depend on both x and y");
}

// Exact Gaussian elimination for an overdetermined system M z = rhs.
// Returns a solution (free variables set to 0) or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> m,
                                             std::vector<Rat> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        std::swap(rhs[piv], rhs[rank]);
        Rat inv = Rat(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (std::size_t cc = col; cc < cols; ++cc)
                m[r][cc] -= factor * m[rank][cc];
            rhs[r] -= factor * rhs[rank];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Rat> z(cols, Rat(0));
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] >= 0) z[col] = rhs[pivot_of_col[col]];
    return z;
}

// Monic u of degree m with u'(x) c(x) = t a(x) u(x), if one exists.
std::optional<UniPoly> solve_inner(const UniPoly& a, const UniPoly& c,
                                   const Rat& t, int m) {
    // Unknowns u_0 .. u_{m-1}; u_m = 1. Match coefficients of
    // u' c - t a u = 0, degree by degree.
    int eq_deg = std::max(m - 1 + c.degree(), m + a.degree());
    std::size_t rows = eq_deg + 1;
    std::vector<std::vector<Rat>> mat(rows, std::vector<Rat>(m, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    auto add_column = [&](int i, std::vector<Rat>* into_rhs) {
        // contribution of u_i: i x^{i-1} c(x) - t x^i a(x)
        for (int s = 0; s <= c.degree(); ++s) {
            if (i >= 1) {
                Rat val = Rat(i) * c.coeff(s);
                if (into_rhs)
                    (*into_rhs)[i - 1 + s] -= val;
                else
                    mat[i - 1 + s][i] += val;
            }
        }
        for (int s = 0; s <= a.degree(); ++s) {
            Rat val = -t * a.coeff(s);
            if (into_rhs)
                (*into_rhs)[i + s] -= val;
            else
                mat[i + s][i] += val;
        }
    };
    for (int i = 0; i < m; ++i) add_column(i, nullptr);
    add_column(m, &rhs);
    auto z = solve_linear(std::move(mat), std::move(rhs));
    if (!z) return std::nullopt;
    std::vector<Rat> uc = *z;
    uc.push_back(Rat(1));
    UniPoly u{std::move(uc)};
    // Guard against spurious solutions from free variables.
    if (!(u.derivative() * c == t * (a * u))) return std::nullopt;
    return u;
}

std::vector<int> divisors_descending(int n) {
    std::vector<int> d;
    for (int e = n; e >= 1; --e)
        if (n % e == 0) d.push_back(e);
    return d;
}

}  // namespace

std::optional<AdditiveForm> additive_decompose(const BiPoly& p) {
    require_both_variables(p, "additive_decompose");
    auto [px, py] = partials(p);
    BiPoly g = gcd_bi(px, py);
    BiPoly n = *px.divide_exact(g);
    BiPoly d = *py.divide_exact(g);
    // The reduced derivative ratio must split as u'(x) / v'(y).
    if (n.deg_y() != 0 || d.deg_x() != 0) return std::nullopt;
    UniPoly du = n.y_coeff(0);
    UniPoly dv = d.x_coeff(0);
    UniPoly u0 = du.antiderivative();
    UniPoly v0 = dv.antiderivative();
    Rat scale = Rat(1) / u0.leading();
    UniPoly u = u0 * scale;
    UniPoly v = v0 * scale;  // same scale keeps u'/v' intact
    auto f = reduce_in_powers(p, BiPoly::from_x(u) + BiPoly::from_y(v));
    if (!f) return std::nullopt;
    AdditiveForm form{*f, u, v};
    if (!(compose_uni_bi(form.f, BiPoly::from_x(u) + BiPoly::from_y(v)) == p))
        return std::nullopt;
    return form;
}

std::optional<MultiplicativeForm> multiplicative_decompose(const BiPoly& p) {
    require_both_variables(p, "multiplicative_decompose");
    auto [px, py] = partials(p);
    BiPoly g = gcd_bi(px, py);
    BiPoly nn = *px.divide_exact(g);
    BiPoly dd = *py.divide_exact(g);
    auto sep_n = separate_product(nn);
    auto sep_d = separate_product(dd);
    if (!sep_n || !sep_d) return std::nullopt;
    const auto& [a, b] = *sep_n;  // N = a(x) b(y), a monic
    const auto& [c, d] = *sep_d;  // D = c(x) d(y), c monic
    // N/D = u'v / (u v'): the x-parts differ by one derivative, likewise y.
    if (a.degree() != c.degree() - 1 || d.degree() != b.degree() - 1)
        return std::nullopt;
    const int dx = p.deg_x();
    const int dy = p.deg_y();
    for (int e : divisors_descending(std::gcd(dx, dy))) {
        int m = dx / e;
        int n_deg = dy / e;
        Rat t = Rat(m);  // m * lc(c) / lc(a), both monic
        if (t != Rat(n_deg) * b.leading() / d.leading()) continue;
        auto u = solve_inner(a, c, t, m);
        if (!u) continue;
        auto v = solve_inner(d, b, t, n_deg);
        if (!v) continue;
        BiPoly inner = BiPoly::from_x(*u) * BiPoly::from_y(*v);
        auto f = reduce_in_powers(p, inner);
        if (!f) continue;
        // Canonicalize to the pair-primitive representative.
        PrimitiveBase pu = primitive_base(*u);
        PrimitiveBase pv = primitive_base(*v);
        unsigned n0 = std::gcd(pu.exponent, pv.exponent);
        MultiplicativeForm form{*f, *u, *v};
        if (n0 >= 2) {
            form.u = pu.base.pow(pu.exponent / n0);
            form.v = pv.base.pow(pv.exponent / n0);
            form.f = f->compose(UniPoly::monomial(Rat(1), n0));
        }
        if (!(compose_uni_bi(form.f,
                             BiPoly::from_x(form.u) * BiPoly::from_y(form.v)) ==
              p))
            continue;
        return form;
    }
    return std::nullopt;
}

PrimitiveBase primitive_base(const UniPoly& p) {
    if (p.is_zero() || p.is_constant() || p.leading() != 1)
        throw precondition_error("primitive_base: input must be monic nonconstant");
    for (int k = p.degree(); k >= 2; --k) {
        if (p.degree() % k != 0) continue;
        if (auto root = nth_root(p, static_cast<unsigned>(k)))
            return {*root, static_cast<unsigned>(k)};
    }
    return {p, 1};
}

}  // namespace erpoly
