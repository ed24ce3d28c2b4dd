#include "salab/morphisms.hpp"

#include "salab/mutation.hpp"

namespace salab {

MorphismData::MorphismData(GaugeMap gg, LieForm aa, Form bb)
    : g(std::move(gg)), a(std::move(aa)), B(std::move(bb)) {
    if (!g.holomorphic()) throw TypeError("morphism gauge map must be holomorphic");
    if (!a.pure(1, 0)) throw TypeError("morphism a-field must be of type (1,0)");
    if (B.p() != 2 || B.q() != 0) throw TypeError("morphism B must be a (2,0)-form");
    if (a.dim() != g.dim() || B.dim() != g.dim()) throw TypeError("morphism chart mismatch");
}

std::string MorphismData::str() const {
    return "{g: " + g.str() + ", a: " + a.str() + ", B: " + B.str() + "}";
}

AutElement::AutElement(GaugeMap gg, Form bb) : g(std::move(gg)), B(std::move(bb)) {
    if (!g.holomorphic()) throw TypeError("automorphism gauge map must be holomorphic");
    if (B.p() != 2 || B.q() != 0) throw TypeError("automorphism B must be a (2,0)-form");
    if (B.dim() != g.dim()) throw TypeError("automorphism chart mismatch");
}

std::string AutElement::str() const { return "{g: " + g.str() + ", B: " + B.str() + "}"; }

SectionQ apply_morphism(const MorphismData& m, const SectionQ& s) {
    LieForm iva = contract(s.V, m.a);  // (0,0)
    LieForm rout = m.g.ad(s.r + iva);

    Form xiout = s.xi;
    xiout += contract(s.V, m.B);
    xiout -= pairing_c(iva, m.a).component(1, 0);        // i_V of the symmetric c(a,a)
    xiout -= pairing_c(m.a, s.r).scaled(CRat(2)).component(1, 0);

    return SectionQ(s.V, std::move(rout), std::move(xiout));
}

QkSection apply_morphism(const MorphismData& m, const QkSection& s) {
    int n = s.dim();
    const int k = s.k;
    const bool twist = (k % 2) != 0;

    LieForm rout = s.r;
    for (int i = 1; i <= n; ++i) {
        if (s.V[i - 1].is_zero()) continue;
        LieForm ai = contract(VectorField10::basis(n, i), m.a);  // (0,0) matrix
        LieForm t = ai.scaled(Scalar::one(n));
        // (0,0) entries: multiply by the V-leg form on the right
        LieForm add(ai.dim(), ai.spec());
        for (const auto& [d, mat] : ai.parts()) {
            std::vector<Form> v;
            v.reserve(mat.size());
            for (const Form& e : mat) v.push_back(wedge(e, s.V[i - 1]));
            add.add_part(d.first, d.second + k, v);
        }
        rout += add;
    }
    rout = m.g.ad(rout);

    Form xiout = s.xi;
    Form extra(n, 1, k);
    for (int i = 1; i <= n; ++i) {
        if (s.V[i - 1].is_zero()) continue;
        VectorField10 ei = VectorField10::basis(n, i);
        Form Bi = contract(ei, m.B);  // (1,0)
        extra += wedge(Bi, s.V[i - 1]);
        Form caa = pairing_c(contract(ei, m.a), m.a).component(1, 0);
        extra -= wedge(caa, s.V[i - 1]);
    }
    extra -= pairing_c(m.a, s.r).scaled(CRat(2)).component(1, k);
    if (twist) extra = -extra;
    xiout += extra;

    return QkSection(k, s.V, std::move(rout), std::move(xiout));
}

MixedForm iso_residual(const StringData& d, const StringData& dprime, const GaugeMap& g,
                       const Form& B) {
    if (B.p() != 2 || B.q() != 0) throw TypeError("iso certificate B must be (2,0)");
    LieForm a = gauge_transform(g.inverse(), dprime.theta).full() - d.theta.full();
    if (!a.pure(1, 0))
        throw TypeError("g^{-1} theta' - theta has a (0,1)-part: g is not a holomorphic bundle map");

    MixedForm out = dprime.H();
    out -= d.H();
    out += pairing_c(a, curvature(d.theta)).scaled(CRat(2));
    out += pairing_c(a, cov_d(d.theta, a));
    out += pairing_c(a, graded_bracket(a, a)).scaled(CRat(Rat(1, 3)));
    out += ext_d(B);
    return out;
}

MixedForm aut_condition_residual(const Connection& theta, const GaugeMap& g, const Form& B) {
    if (!g.holomorphic()) throw TypeError("automorphism gauge map must be holomorphic");
    LieForm ag = a_of(g, theta);
    MixedForm out = ext_d(B);
    out -= pairing_c(ag, curvature(theta)).scaled(CRat(2));
    out -= pairing_c(ag, cov_d(theta, ag));
    out -= pairing_c(ag, graded_bracket(ag, ag)).scaled(CRat(Rat(1, 3)));
    return out;
}

AutElement s_product(const AutElement& x, const AutElement& y) {
    LieForm ax = mc_form(x.g);
    LieForm ay = mc_form(y.g);
    LieForm moved = smat_lmul(y.g.g_inv(), smat_rmul(ax, y.g.g()));  // Ad(g2^{-1}) a^{g1}
    CRat sign{Rat(mutation::flip_if(mutation::Site::group_product_c_sign))};
    Form B = x.B + y.B + pairing_c(moved, ay).component(2, 0).scaled(sign);
    return AutElement(x.g * y.g, std::move(B));
}

AutElement s_inverse(const AutElement& x) { return AutElement(x.g.inverse(), -x.B); }

}  // namespace salab
