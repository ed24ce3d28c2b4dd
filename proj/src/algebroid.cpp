#include "salab/algebroid.hpp"

#include <sstream>

#include "salab/mutation.hpp"

namespace salab {

namespace {

// Entrywise L ^ f with the plain form on the right.
LieForm lf_wedge_form(const LieForm& L, const Form& f) {
    LieForm out(L.dim(), L.spec());
    if (f.is_zero()) return out;
    for (const auto& [d, m] : L.parts()) {
        std::vector<Form> v;
        v.reserve(m.size());
        for (const Form& e : m) v.push_back(wedge(e, f));
        out.add_part(d.first + f.p(), d.second + f.q(), v);
    }
    return out;
}

}  // namespace

StringData::StringData(Connection t, Form h30, Form h21)
    : theta(std::move(t)), H30(std::move(h30)), H21(std::move(h21)) {
    if (H30.p() != 3 || H30.q() != 0) throw TypeError("H30 must be a (3,0)-form");
    if (H21.p() != 2 || H21.q() != 1) throw TypeError("H21 must be a (2,1)-form");
    if (H30.dim() != theta.dim() || H21.dim() != theta.dim())
        throw TypeError("string data chart mismatch");
}

MixedForm StringData::H() const {
    MixedForm h(dim());
    h.add(H30);
    h.add(H21);
    return h;
}

std::string StringData::str() const {
    return "{theta: " + theta.str() + ", H30: " + H30.str() + ", H21: " + H21.str() + "}";
}

SectionQ::SectionQ(VectorField10 v, LieForm r0, Form x)
    : V(std::move(v)), r(std::move(r0)), xi(std::move(x)) {
    if (!r.pure(0, 0)) throw TypeError("section r-component must be a (0,0) form");
    if (xi.p() != 1 || xi.q() != 0) throw TypeError("section xi-component must be (1,0)");
    if (V.dim() != r.dim() || V.dim() != xi.dim()) throw TypeError("section chart mismatch");
}

SectionQ& SectionQ::operator+=(const SectionQ& o) {
    V += o.V;
    r += o.r;
    xi += o.xi;
    return *this;
}

SectionQ& SectionQ::operator-=(const SectionQ& o) {
    V -= o.V;
    r -= o.r;
    xi -= o.xi;
    return *this;
}

SectionQ operator-(const SectionQ& a) { return SectionQ(-a.V, -a.r, -a.xi); }

SectionQ SectionQ::scaled(const Scalar& f) const {
    return SectionQ(V.scaled(f), r.scaled(f), xi.scaled(f));
}

std::string SectionQ::str() const {
    return "{V: " + V.str() + ", r: " + r.str() + ", xi: " + xi.str() + "}";
}

QkSection::QkSection(int kk, std::vector<Form> v, LieForm r0, Form x)
    : k(kk), V(std::move(v)), r(std::move(r0)), xi(std::move(x)) {
    if ((int)V.size() != r.dim()) throw TypeError("Qk section component count");
    for (const Form& f : V)
        if (f.p() != 0 || f.q() != k) throw TypeError("Qk section V-leg must be (0,k)");
    if (!r.pure(0, k)) throw TypeError("Qk section r-leg must be (0,k)");
    if (xi.p() != 1 || xi.q() != k) throw TypeError("Qk section xi-leg must be (1,k)");
}

QkSection QkSection::from_section(const SectionQ& s) {
    int n = s.dim();
    std::vector<Form> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back(Form::scalar(s.V.component(i)));
    return QkSection(0, std::move(v), s.r, s.xi);
}

bool QkSection::is_zero() const {
    for (const Form& f : V)
        if (!f.is_zero()) return false;
    return r.is_zero() && xi.is_zero();
}

QkSection operator-(QkSection a, const QkSection& b) {
    if (a.k != b.k) throw TypeError("Qk section degree mismatch");
    for (std::size_t i = 0; i < a.V.size(); ++i) a.V[i] -= b.V[i];
    a.r -= b.r;
    a.xi -= b.xi;
    return a;
}

std::string QkSection::str() const {
    std::ostringstream os;
    os << "{V: [";
    for (std::size_t i = 0; i < V.size(); ++i) {
        if (i) os << ", ";
        os << V[i].str();
    }
    os << "], r: " << r.str() << ", xi: " << xi.str() << "}";
    return os.str();
}

IntegrabilityResidual integrability_residual(const StringData& d) {
    LieForm F = curvature(d.theta);
    if (F.parts().count({0, 2}))
        throw NonIntegrableConnection("F^{0,2} != 0: theta does not define a holomorphic structure");
    LieForm F20 = LieForm::from_matrix(d.dim(), d.spec(), 2, 0, F.matrix_at(2, 0));
    LieForm F11 = LieForm::from_matrix(d.dim(), d.spec(), 1, 1, F.matrix_at(1, 1));

    IntegrabilityResidual out;
    out.r40 = MixedForm(del(d.H30));
    out.r40 += pairing_c(F20, F20);
    out.r31 = MixedForm(delbar(d.H30));
    out.r31 += MixedForm(del(d.H21));
    out.r31 += pairing_c(F20, F11).scaled(CRat(2));
    out.r22 = MixedForm(delbar(d.H21));
    out.r22 += pairing_c(F11, F11);
    return out;
}

Scalar pairing_Q(const SectionQ& s1, const SectionQ& s2) {
    Scalar out = contract(s1.V, s2.xi).scalar_value();
    out += contract(s2.V, s1.xi).scalar_value();
    out = out.scaled(CRat(Rat(1, 2)));
    MixedForm c = pairing_c(s1.r, s2.r);
    out += c.component(0, 0).scalar_value();
    return out;
}

VectorField10 anchor(const SectionQ& s) { return s.V; }

APSection rho0(const SectionQ& s) { return APSection{s.V, s.r}; }

QkSection dolbeault_Q(const StringData& d, const QkSection& s) {
    int n = d.dim();
    LieForm F = curvature(d.theta);
    LieForm F11 = LieForm::from_matrix(n, d.spec(), 1, 1, F.matrix_at(1, 1));
    const int k = s.k;
    const bool twist = (k % 2) != 0;

    std::vector<Form> Vout;
    Vout.reserve(n);
    for (const Form& f : s.V) Vout.push_back(delbar(f));

    LieForm rout = delbar_theta(d.theta, s.r);
    for (int i = 1; i <= n; ++i) {
        if (s.V[i - 1].is_zero()) continue;
        LieForm Fi = contract(VectorField10::basis(n, i), F11);  // (0,1) valued
        rout += lf_wedge_form(Fi, s.V[i - 1]);
    }

    Form xiout = delbar(s.xi);
    Form extra(n, 1, k + 1);
    for (int i = 1; i <= n; ++i) {
        if (s.V[i - 1].is_zero()) continue;
        Form Hi = contract(VectorField10::basis(n, i), d.H21);  // (1,1)
        extra += wedge(Hi, s.V[i - 1]);
    }
    MixedForm cf = pairing_c(F11, s.r).scaled(CRat(2));
    extra += cf.component(1, k + 1);
    if (twist) extra = -extra;
    xiout += extra;

    return QkSection(k + 1, std::move(Vout), std::move(rout), std::move(xiout));
}

QkSection dolbeault_Q(const StringData& d, const SectionQ& s) {
    return dolbeault_Q(d, QkSection::from_section(s));
}

SectionQ dorfman(const StringData& d, const SectionQ& s1, const SectionQ& s2) {
    int n = d.dim();
    LieForm F = curvature(d.theta);
    LieForm F20 = LieForm::from_matrix(n, d.spec(), 2, 0, F.matrix_at(2, 0));

    const VectorField10 &V = s1.V, &W = s2.V;
    const LieForm &r = s1.r, &t = s2.r;
    const Form &xi = s1.xi, &eta = s2.xi;

    VectorField10 Vout = vf_bracket(V, W);

    // -F20(V,W) + del^theta_V t - del^theta_W r - [r,t]
    LieForm rout = -contract(W, contract(V, F20));
    rout += contract(V, del_theta(d.theta, t));
    rout -= contract(W, del_theta(d.theta, r));
    rout -= graded_bracket(r, t);

    // i_V del eta + del(eta(V)) - i_W del xi + i_V i_W H30
    Form xiout = contract(V, del(eta));
    xiout += del(Form::scalar(contract(V, eta).scalar_value()));
    xiout -= contract(W, del(xi));
    xiout += contract(V, contract(W, d.H30));
    // + 2c(del^theta r, t) + 2c(i_V F20, t) - 2c(i_W F20, r)
    CRat two{Rat(2 * mutation::flip_if(mutation::Site::dorfman_pairing_sign))};
    xiout += pairing_c(del_theta(d.theta, r), t).scaled(two).component(1, 0);
    xiout += pairing_c(contract(V, F20), t).scaled(CRat(2)).component(1, 0);
    xiout -= pairing_c(contract(W, F20), r).scaled(CRat(2)).component(1, 0);

    return SectionQ(std::move(Vout), std::move(rout), std::move(xiout));
}

Form pairing_Qk(const QkSection& x, const SectionQ& s) {
    int n = s.dim();
    Form out = contract(s.V, x.xi);  // (0,k)
    for (int i = 1; i <= n; ++i) {
        Scalar xii = contract(VectorField10::basis(n, i), s.xi).scalar_value();
        if (xii.is_zero() || x.V[i - 1].is_zero()) continue;
        out += x.V[i - 1].scaled(xii);
    }
    out = out.scaled(CRat(Rat(1, 2)));
    out += pairing_c(x.r, s.r).component(0, x.k);
    return out;
}

CourantReport courant_axioms_residual(const StringData& d, const SectionQ& s1, const SectionQ& s2,
                                      const SectionQ& s3, const Scalar& phi) {
    CourantReport rep;

    SectionQ b23 = dorfman(d, s2, s3);
    SectionQ b12 = dorfman(d, s1, s2);
    SectionQ b13 = dorfman(d, s1, s3);
    rep.d1 = dorfman(d, s1, b23) - dorfman(d, b12, s3) - dorfman(d, s2, b13);

    rep.d2 = anchor(b12) - vf_bracket(anchor(s1), anchor(s2));

    rep.d3 = dorfman(d, s1, s2.scaled(phi)) - s2.scaled(anchor(s1).apply(phi)) - b12.scaled(phi);

    Scalar p23 = pairing_Q(s2, s3);
    rep.d4 = anchor(s1).apply(p23) - pairing_Q(b12, s3) - pairing_Q(s2, b13);

    SectionQ sym = b12 + dorfman(d, s2, s1);
    Form dpair = del(Form::scalar(pairing_Q(s1, s2).scaled(CRat(2))));
    rep.d5 = sym - SectionQ(VectorField10(d.dim()), LieForm(d.dim(), d.spec()), dpair);

    return rep;
}

}  // namespace salab
