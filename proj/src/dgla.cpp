#include "salab/dgla.hpp"

#include "salab/mutation.hpp"

namespace salab {

namespace mutation {
namespace {
Site g_active = Site::none;
}
Site active() { return g_active; }
void set_active(Site s) { g_active = s; }
}  // namespace mutation

LElement::LElement(int k, LieForm a, MixedForm bb)
    : degree(k), alpha(std::move(a)), b(std::move(bb)) {
    if (k < 0) throw TypeError("L element degree must be >= 0");
    if (!alpha.pure(0, k)) throw TypeError("L element alpha must be of type (0,k)");
    if (!b.is_zero() && b.dim() != alpha.dim()) throw TypeError("L element chart mismatch");
    if (!b.in_omega_leq(k)) throw TypeError("L element b must lie in Omega^{<=k}");
}

LElement operator+(const LElement& x, const LElement& y) {
    if (x.degree != y.degree) throw TypeError("L element degree mismatch in +");
    return LElement(x.degree, x.alpha + y.alpha, x.b + y.b);
}

LElement operator-(const LElement& x, const LElement& y) {
    if (x.degree != y.degree) throw TypeError("L element degree mismatch in -");
    return LElement(x.degree, x.alpha - y.alpha, x.b - y.b);
}

std::string LElement::str() const {
    return "{degree: " + std::to_string(degree) + ", alpha: " + alpha.str() + ", b: " + b.str() +
           "}";
}

GaugeElement::GaugeElement(GaugeMap gg, LieForm aa, Form bb)
    : g(std::move(gg)), a(std::move(aa)), B(std::move(bb)) {
    if (!a.pure(1, 0)) throw TypeError("gauge element a-field must be (1,0)");
    if (B.p() != 2 || B.q() != 0) throw TypeError("gauge element B must be (2,0)");
    if (a.dim() != g.dim() || B.dim() != g.dim()) throw TypeError("gauge element chart mismatch");
}

std::string GaugeElement::str() const {
    return "{g: " + g.str() + ", a: " + a.str() + ", B: " + B.str() + "}";
}

TangentPair::TangentPair(MixedForm h, LieForm t) : Hdot(std::move(h)), thetadot(std::move(t)) {
    if (!Hdot.in_omega_leq(1)) throw TypeError("Hdot must lie in Omega^{<=1}");
    for (const auto& [d, m] : thetadot.parts())
        if (d.first + d.second != 1) throw TypeError("thetadot must be a 1-form");
}

std::string TangentPair::str() const {
    return "{Hdot: " + Hdot.str() + ", thetadot: " + thetadot.str() + "}";
}

LieForm require_f11(const StringData& base) {
    LieForm F = curvature(base.theta);
    if (F.parts().count({0, 2}))
        throw BadCurvatureType("deformation complex requires F^{0,2} = 0");
    if (F.parts().count({2, 0}))
        throw BadCurvatureType("deformation complex requires F^{2,0} = 0");
    return F;
}

LElement d_Q(const StringData& base, const LElement& x) {
    LieForm F = require_f11(base);
    LieForm alpha_out = delbar_theta(base.theta, x.alpha);
    MixedForm b_out = ext_d(x.b);
    b_out -= pairing_c(del_theta(base.theta, x.alpha), F).scaled(CRat(2));
    return LElement(x.degree + 1, std::move(alpha_out), std::move(b_out));
}

LElement dgla_bracket(const StringData& base, const LElement& x, const LElement& y) {
    require_f11(base);
    LieForm alpha_out = graded_bracket(x.alpha, y.alpha);
    CRat sign{Rat(((x.degree % 2) ? -1 : 1) * 2)};
    sign = sign * CRat(Rat(mutation::flip_if(mutation::Site::dgla_bracket_sign)));
    MixedForm b_out =
        pairing_c(del_theta(base.theta, x.alpha), del_theta(base.theta, y.alpha)).scaled(sign);
    return LElement(x.degree + y.degree, std::move(alpha_out), std::move(b_out));
}

LElement mc_residual(const StringData& base, const LElement& x) {
    if (x.degree != 1) throw TypeError("Maurer-Cartan elements have degree 1");
    LElement out = d_Q(base, x);
    LElement half = dgla_bracket(base, x, x).scaled(CRat(Rat(1, 2)));
    return out + half;
}

StringData deformed_data(const StringData& base, const LElement& x, bool force) {
    if (x.degree != 1) throw TypeError("deformations are degree-1 elements");
    if (!force && !mc_residual(base, x).is_zero())
        throw MCViolated("element does not satisfy the Maurer-Cartan equation");
    Connection theta = base.theta + x.alpha;
    Form H30 = base.H30 - x.b.component(3, 0);
    Form H21 = base.H21 - x.b.component(2, 1);
    return StringData(std::move(theta), std::move(H30), std::move(H21));
}

MixedForm obstruction_rep(const StringData& base, const LieForm& alpha) {
    LieForm F = require_f11(base);
    if (!alpha.pure(0, 1)) throw TypeError("obstruction input must be of type (0,1)");
    if (!delbar_theta(base.theta, alpha).is_zero())
        throw NotACocycle("alpha is not a dbar^theta-cocycle");
    return pairing_c(del_theta(base.theta, alpha), F).scaled(CRat(2));
}

GaugeElement gauge_product(const GaugeElement& x, const GaugeElement& y) {
    LieForm moved = smat_lmul(y.g.g_inv(), smat_rmul(x.a, y.g.g()));
    Form B = x.B + y.B;
    CRat sign{Rat(mutation::flip_if(mutation::Site::group_product_c_sign))};
    B += pairing_c(moved, y.a).component(2, 0).scaled(sign);
    return GaugeElement(x.g * y.g, moved + y.a, std::move(B));
}

StringData gauge_act(const GaugeElement& x, const StringData& p) {
    Connection shifted = p.theta + x.a;
    MixedForm H = p.H();
    H += ext_d(x.B);
    H += chern_simons(p.theta);
    H -= chern_simons(shifted);
    H -= ext_d(pairing_c(p.theta.full(), x.a));
    for (const auto& [d, f] : H.parts())
        if (!(d == Bidegree{3, 0} || d == Bidegree{2, 1}))
            throw TypeError("gauge action left Omega^{<=1}; the base has F^{0,2} != 0");
    Connection theta = gauge_transform(x.g, shifted);
    return StringData(std::move(theta), H.component(3, 0), H.component(2, 1));
}

TangentPair infinitesimal_action(const StringData& base, const LieForm& alpha, const LieForm& a,
                                 const Form& b) {
    if (!alpha.pure(0, 0)) throw TypeError("infinitesimal gauge alpha must be (0,0)");
    if (!a.pure(1, 0)) throw TypeError("infinitesimal gauge a must be (1,0)");
    if (b.p() != 2 || b.q() != 0) throw TypeError("infinitesimal gauge b must be (2,0)");
    LieForm F = curvature(base.theta);
    MixedForm Hdot = ext_d(b);
    Hdot -= pairing_c(a, F).scaled(CRat(2));
    LieForm thetadot = a - cov_d(base.theta, alpha);
    return TangentPair(std::move(Hdot), std::move(thetadot));
}

std::pair<MixedForm, LieForm> infinitesimal_consistency_residual(const StringData& base,
                                                                 const LieForm& alpha,
                                                                 const LieForm& a, const Form& b) {
    int n = base.dim();
    const LieAlgebraSpec& spec = base.spec();
    int k = spec.k();
    Scalar eps = Scalar::eps(n);

    SMatrix ge(k * k, Scalar(n)), gi(k * k, Scalar(n));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            Scalar aij = alpha.entry(0, 0, i, j).scalar_value() * eps;
            if (i == j) {
                ge[(i - 1) * k + (j - 1)] = Scalar::one(n) + aij;
                gi[(i - 1) * k + (j - 1)] = Scalar::one(n) - aij;
            } else {
                ge[(i - 1) * k + (j - 1)] = aij;
                gi[(i - 1) * k + (j - 1)] = -aij;
            }
        }
    }
    GaugeElement path(GaugeMap(n, spec, std::move(ge), std::move(gi)), a.scaled(eps),
                      b.scaled(eps));
    StringData moved = gauge_act(path, base);

    TangentPair L = infinitesimal_action(base, alpha, a, b);

    // moved == base + eps * L, exactly, in the eps-truncated ring
    MixedForm Hres(n);
    Hres.add(moved.H30 - base.H30 - L.Hdot.component(3, 0).scaled(eps));
    Hres.add(moved.H21 - base.H21 - L.Hdot.component(2, 1).scaled(eps));

    LieForm tres = moved.theta.full() - base.theta.full();
    tres -= L.thetadot.scaled(eps);
    return {std::move(Hres), std::move(tres)};
}

StringData hat_epsilon(const StringData& base, const LElement& x) {
    if (x.degree != 1) throw TypeError("hat_epsilon takes a degree-1 element");
    Connection theta = base.theta + x.alpha;
    return StringData(std::move(theta), base.H30 - x.b.component(3, 0),
                      base.H21 - x.b.component(2, 1));
}

LElement phi_map(const StringData& base, const TangentPair& t) {
    LieForm F = require_f11(base);
    int n = base.dim();
    LieForm alpha(n, base.spec());
    alpha.add_part(0, 1, t.thetadot.matrix_at(0, 1));
    LieForm t10(n, base.spec());
    t10.add_part(1, 0, t.thetadot.matrix_at(1, 0));
    MixedForm b = -t.Hdot;
    b -= pairing_c(t10, F).scaled(CRat(2));
    return LElement(1, std::move(alpha), std::move(b));
}

std::pair<LieForm, MixedForm> tangent_integrability_residual(const StringData& base,
                                                             const TangentPair& t) {
    LieForm F = curvature(base.theta);
    int n = base.dim();
    LieForm t01(n, base.spec());
    t01.add_part(0, 1, t.thetadot.matrix_at(0, 1));
    LieForm first = delbar_theta(base.theta, t01);
    MixedForm inner = t.Hdot;
    inner += pairing_c(t.thetadot, F).scaled(CRat(2));
    return {std::move(first), ext_d(inner)};
}

}  // namespace salab
