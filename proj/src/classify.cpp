#include "erpoly/classify.hpp"

#include "erpoly/errors.hpp"

namespace erpoly {

namespace {

void require_both_variables(const BiPoly& p, const char* who) {
    if (!p.depends_on_x() || !p.depends_on_y())
        throw trivial_dependence_error(
            std::string(who) + ": polynomial must depend on both x and y");
}

// v == rho * u for a nonzero rational rho?
std::optional<Rat> proportional(const UniPoly& v, const UniPoly& u) {
    if (v.is_zero() || u.is_zero() || v.degree() != u.degree())
        return std::nullopt;
    Rat rho = v.leading() / u.leading();
    if (v == u * rho) return rho;
    return std::nullopt;
}

BiPoly recompose_additive(const UniPoly& f, const UniPoly& u, const UniPoly& v,
                          const Rat& gamma, const Rat& delta) {
    return compose_uni_bi(f, BiPoly::from_x(u * gamma) + BiPoly::from_y(v * delta));
}

BiPoly recompose_multiplicative(const UniPoly& f, const UniPoly& u,
                                const UniPoly& v, unsigned m, unsigned n) {
    return compose_uni_bi(f, BiPoly::from_x(u.pow(m)) * BiPoly::from_y(v.pow(n)));
}

// Scale f's argument so that delta/gamma is rho in lowest terms, gamma > 0.
void reduce_scalars(const Rat& rho, UniPoly* f, Rat* gamma, Rat* delta) {
    *gamma = Rat(rat_den(rho));
    *delta = Rat(rat_num(rho));
    if (*gamma != 1)
        *f = f->compose(UniPoly::monomial(Rat(1) / *gamma, 1));
}

}  // namespace

PairClassification classify_pair(const BiPoly& p, const BiPoly& q) {
    require_both_variables(p, "classify_pair");
    require_both_variables(q, "classify_pair");
    PairClassification out;

    auto ad_p = additive_decompose(p);
    auto ad_q = additive_decompose(q);
    if (ad_p && ad_q && ad_p->u == ad_q->u) {
        if (auto rho = proportional(ad_p->v, ad_q->v)) {
            AdditivePairCert cert;
            cert.f = ad_p->f;
            cert.g = ad_q->f;
            cert.u = ad_p->u;
            cert.v = ad_p->v;
            cert.delta2 = Rat(1) / *rho;
            bool ok =
                recompose_additive(cert.f, cert.u, cert.v, cert.gamma1,
                                   cert.delta1) == p &&
                recompose_additive(cert.g, cert.u, cert.v, cert.gamma2,
                                   cert.delta2) == q;
            if (ok) {
                out.verdict = Verdict::AdditivePair;
                out.additive = std::move(cert);
                return out;
            }
        }
    }

    auto mu_p = multiplicative_decompose(p);
    auto mu_q = multiplicative_decompose(q);
    if (mu_p && mu_q) {
        PrimitiveBase bu_p = primitive_base(mu_p->u);
        PrimitiveBase bv_p = primitive_base(mu_p->v);
        PrimitiveBase bu_q = primitive_base(mu_q->u);
        PrimitiveBase bv_q = primitive_base(mu_q->v);
        if (bu_p.base == bu_q.base && bv_p.base == bv_q.base) {
            MultiplicativePairCert cert;
            cert.f = mu_p->f;
            cert.g = mu_q->f;
            cert.u = bu_p.base;
            cert.v = bv_p.base;
            cert.m1 = bu_p.exponent;
            cert.n1 = bv_p.exponent;
            cert.m2 = bu_q.exponent;
            cert.n2 = bv_q.exponent;
            bool ok =
                recompose_multiplicative(cert.f, cert.u, cert.v, cert.m1,
                                         cert.n1) == p &&
                recompose_multiplicative(cert.g, cert.u, cert.v, cert.m2,
                                         cert.n2) == q;
            if (ok) {
                out.verdict = Verdict::MultiplicativePair;
                out.multiplicative = std::move(cert);
                return out;
            }
        }
    }
    return out;  // ExpandingCandidate
}

SymmetricClassification classify_symmetric(const BiPoly& p, const BiPoly& q) {
    require_both_variables(p, "classify_symmetric");
    require_both_variables(q, "classify_symmetric");
    SymmetricClassification out;

    PairClassification direct = classify_pair(p, q);
    if (direct.verdict == Verdict::ExpandingCandidate) return out;
    PairClassification swapped = classify_pair(p.swap_vars(), q);
    if (swapped.verdict != direct.verdict) return out;

    if (direct.verdict == Verdict::AdditivePair) {
        // Q's canonical form must agree across the two runs.
        if (!(direct.additive->g == swapped.additive->g)) return out;
        const UniPoly& u = direct.additive->u;
        auto rho1 = proportional(direct.additive->v, u);
        if (!rho1) return out;
        // Q's y-part in the common base.
        UniPoly vq = direct.additive->v * direct.additive->delta2;
        auto rho2 = proportional(vq, u);
        if (!rho2) return out;
        SymmetricAdditiveCert cert;
        cert.u = u;
        cert.f = direct.additive->f;
        cert.g = direct.additive->g;
        reduce_scalars(*rho1, &cert.f, &cert.gamma1, &cert.delta1);
        reduce_scalars(*rho2, &cert.g, &cert.gamma2, &cert.delta2);
        bool ok = recompose_additive(cert.f, cert.u, cert.u, cert.gamma1,
                                     cert.delta1) == p &&
                  recompose_additive(cert.g, cert.u, cert.u, cert.gamma2,
                                     cert.delta2) == q;
        if (!ok) return out;
        out.verdict = Verdict::AdditivePair;
        out.additive = std::move(cert);
        return out;
    }

    // Multiplicative: the x-base and y-base must be the same polynomial.
    const auto& cert_pq = *direct.multiplicative;
    if (!(cert_pq.u == cert_pq.v)) return out;
    if (!(swapped.multiplicative->g == cert_pq.g)) return out;
    SymmetricMultiplicativeCert cert;
    cert.f = cert_pq.f;
    cert.g = cert_pq.g;
    cert.u = cert_pq.u;
    cert.m1 = cert_pq.m1;
    cert.n1 = cert_pq.n1;
    cert.m2 = cert_pq.m2;
    cert.n2 = cert_pq.n2;
    bool ok = recompose_multiplicative(cert.f, cert.u, cert.u, cert.m1,
                                       cert.n1) == p &&
              recompose_multiplicative(cert.g, cert.u, cert.u, cert.m2,
                                       cert.n2) == q;
    if (!ok) return out;
    out.verdict = Verdict::MultiplicativePair;
    out.multiplicative = std::move(cert);
    return out;
}

SymmetricClassification classify_single(const BiPoly& p) {
    return classify_symmetric(p, p);
}

}  // namespace erpoly
