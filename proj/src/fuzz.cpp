#include "salab/fuzz.hpp"

#include <sstream>

#include "salab/textio.hpp"

namespace salab {

namespace {

// Random polynomial restricted to a subset of the variables (bit i of
// z_mask/zb_mask allows z_{i+1}/zb_{i+1}).
Scalar random_scalar_vars(Rng& rng, int n, unsigned z_mask, unsigned zb_mask,
                          const ScalarOpts& opt) {
    Scalar out(n);
    for (int t = 0; t < opt.terms; ++t) {
        Mono m(2 * n + 1, 0);
        int budget = rng.range(0, opt.max_degree);
        for (int d = 0; d < budget; ++d) {
            int v = rng.range(0, n - 1);
            bool zbar = rng.chance(1, 2);
            if (zbar && (zb_mask & (1u << v)))
                m[n + v] += 1;
            else if (!zbar && (z_mask & (1u << v)))
                m[v] += 1;
        }
        int num = rng.range(-opt.coeff_range, opt.coeff_range);
        out.add_term(m, CRat(Rat(num)));
    }
    return out;
}

SMatrix identity_matrix(int n, int k) {
    SMatrix m(k * k, Scalar(n));
    for (int i = 0; i < k; ++i) m[i * k + i] = Scalar::one(n);
    return m;
}

}  // namespace

LieAlgebraSpec random_spec(Rng& rng, int max_k) {
    int k = rng.range(1, max_k);
    if (k >= 3 && rng.chance(1, 3)) {
        // two blocks with distinct weights
        return LieAlgebraSpec(k, {{1, k - 1, CRat(1)}, {k, k, CRat(Rat(-2))}});
    }
    CRat mu{Rat(rng.chance(1, 4) ? 2 : 1)};
    return LieAlgebraSpec::gl(k, mu);
}

GaugeMap random_gauge_map(Rng& rng, int n, const LieAlgebraSpec& spec, bool holomorphic,
                          const ScalarOpts& opt) {
    int k = spec.k();
    GaugeMap g = GaugeMap::identity(n, spec);
    int factors = rng.range(1, 3);
    for (int f = 0; f < factors; ++f) {
        // collect off-diagonal in-block slots
        std::vector<std::pair<int, int>> slots;
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                if (i != j && spec.same_block(i, j)) slots.emplace_back(i, j);
        if (!slots.empty() && rng.chance(2, 3)) {
            auto [i, j] = slots[rng.range(0, (int)slots.size() - 1)];
            ScalarOpts po = opt;
            po.allow_zbar = !holomorphic;
            po.terms = 1 + (opt.terms > 1 && rng.chance(1, 2) ? 1 : 0);
            Scalar p = random_scalar(rng, n, po);
            SMatrix m = identity_matrix(n, k);
            SMatrix mi = identity_matrix(n, k);
            m[(i - 1) * k + (j - 1)] = p;
            mi[(i - 1) * k + (j - 1)] = -p;
            g = g * GaugeMap(n, spec, std::move(m), std::move(mi));
        } else {
            SMatrix m = identity_matrix(n, k);
            SMatrix mi = identity_matrix(n, k);
            for (int i = 0; i < k; ++i) {
                int c = rng.range(1, 3) * (rng.chance(1, 2) ? 1 : -1);
                m[i * k + i] = Scalar::constant(n, CRat(Rat(c)));
                mi[i * k + i] = Scalar::constant(n, CRat(Rat(1, c)));
            }
            g = g * GaugeMap(n, spec, std::move(m), std::move(mi));
        }
    }
    return g;
}

LieForm random_lie_form(Rng& rng, int n, const LieAlgebraSpec& spec, int p, int q,
                        const ScalarOpts& opt) {
    int k = spec.k();
    std::vector<Form> entries;
    entries.reserve(k * k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (!spec.same_block(i, j) || rng.chance(1, 3))
                entries.push_back(Form(n, p, q));
            else
                entries.push_back(random_form(rng, n, p, q, opt));
        }
    return LieForm::from_matrix(n, spec, p, q, std::move(entries));
}

Connection random_connection(Rng& rng, int n, const LieAlgebraSpec& spec, const ScalarOpts& opt) {
    return Connection(random_lie_form(rng, n, spec, 1, 0, opt),
                      random_lie_form(rng, n, spec, 0, 1, opt));
}

Connection random_connection_f11(Rng& rng, int n, const LieAlgebraSpec& spec,
                                 const ScalarOpts& opt) {
    int k = spec.k();
    unsigned all = (1u << n) - 1;
    // theta10 = A(z1, zb) dz1, theta01 = B(z, zb1) dzb1: F is pure (1,1)
    std::vector<Form> t10(k * k, Form(n, 1, 0)), t01(k * k, Form(n, 0, 1));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            if (!spec.same_block(i, j)) continue;
            if (rng.chance(2, 3)) {
                Form f(n, 1, 0);
                f.add_term({1}, {}, random_scalar_vars(rng, n, 1u, all, opt));
                t10[(i - 1) * k + (j - 1)] = std::move(f);
            }
            if (rng.chance(1, 2)) {
                Form f(n, 0, 1);
                f.add_term({}, {1}, random_scalar_vars(rng, n, all, 1u, opt));
                t01[(i - 1) * k + (j - 1)] = std::move(f);
            }
        }
    return Connection(LieForm::from_matrix(n, spec, 1, 0, std::move(t10)),
                      LieForm::from_matrix(n, spec, 0, 1, std::move(t01)));
}

Connection random_connection_apstyle(Rng& rng, int n, const LieAlgebraSpec& spec,
                                     const ScalarOpts& opt) {
    return Connection(random_lie_form(rng, n, spec, 1, 0, opt), LieForm(n, spec));
}

StringData random_integrable_data(Rng& rng, int n, const LieAlgebraSpec& spec,
                                  const ScalarOpts& opt) {
    if (n > 3) throw TypeError("integrable generator supports n <= 3");
    Connection theta =
        rng.chance(1, 2) ? random_connection_f11(rng, n, spec, opt)
                         : random_connection_apstyle(rng, n, spec, opt);
    LieForm F = curvature(theta);
    MixedForm p = pairing_c(F, F);

    // dbar H21 = -c(F^F)^{2,2}; dbar H30 = -(del H21 + 2c(F20^F11))
    Form H21(n, 2, 1), H30(n, 3, 0);
    Form p22 = p.component(2, 2);
    if (!p22.is_zero()) H21 = -delbar_primitive(MixedForm(p22)).component(2, 1);
    MixedForm x(n);
    x.add(del(H21));
    LieForm F20 = LieForm::from_matrix(n, spec, 2, 0, F.matrix_at(2, 0));
    LieForm F11 = LieForm::from_matrix(n, spec, 1, 1, F.matrix_at(1, 1));
    x += pairing_c(F20, F11).scaled(CRat(2));
    Form x31 = x.component(3, 1);
    if (!x31.is_zero()) H30 = -delbar_primitive(MixedForm(x31)).component(3, 0);

    // optional exact shift keeps integrability
    if (rng.chance(1, 2)) {
        Form B = random_form(rng, n, 2, 0, opt);
        MixedForm dB = ext_d(B);
        H30 += dB.component(3, 0);
        H21 += dB.component(2, 1);
    }

    StringData out(std::move(theta), std::move(H30), std::move(H21));
    if (!integrability_residual(out).is_zero())
        throw TypeError("integrable generator produced non-integrable data");
    return out;
}

SectionQ random_section(Rng& rng, int n, const LieAlgebraSpec& spec, const ScalarOpts& opt) {
    return SectionQ(random_vector_field(rng, n, opt), random_lie_form(rng, n, spec, 0, 0, opt),
                    random_form(rng, n, 1, 0, opt));
}

LElement random_lelement(Rng& rng, int n, const LieAlgebraSpec& spec, int k,
                         const ScalarOpts& opt) {
    LieForm alpha = random_lie_form(rng, n, spec, 0, k, opt);
    MixedForm b(n);
    for (int j = 0; j <= k; ++j) {
        if (j + 2 > n || k - j > n) continue;
        if (rng.chance(1, 3)) continue;
        b.add(random_form(rng, n, j + 2, k - j, opt));
    }
    return LElement(k, std::move(alpha), std::move(b));
}

GaugeElement random_gauge_element(Rng& rng, int n, const LieAlgebraSpec& spec, bool holomorphic,
                                  const ScalarOpts& opt) {
    return GaugeElement(random_gauge_map(rng, n, spec, holomorphic, opt),
                        random_lie_form(rng, n, spec, 1, 0, opt), random_form(rng, n, 2, 0, opt));
}

LElement gauge_orbit_mc_witness(const StringData& base, const GaugeElement& x) {
    StringData p1 = gauge_act(x, base);
    LieForm atilde = base.theta.theta10() - p1.theta.theta10();
    GaugeElement fix(GaugeMap::identity(base.dim(), base.spec()), std::move(atilde),
                     Form(base.dim(), 2, 0));
    StringData p2 = gauge_act(fix, p1);
    if (!(p2.theta.theta10() == base.theta.theta10()))
        throw TypeError("mc witness construction failed to restore the (1,0)-leg");
    LieForm alpha = p2.theta.theta01() - base.theta.theta01();
    MixedForm b = base.H() - p2.H();
    return LElement(1, std::move(alpha), std::move(b));
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> fail(const std::string& what, const std::string& witness) {
    return what + "\n  witness: " + witness;
}

std::optional<std::string> prop_wedge_comm(PropertyCtx& c) {
    Rng& rng = *c.rng;
    int n = c.n;
    int pa = rng.range(0, n), qa = rng.range(0, n), pb = rng.range(0, n), qb = rng.range(0, n);
    Form a = random_form(rng, n, pa, qa, c.opt);
    Form b = random_form(rng, n, pb, qb, c.opt);
    Form lhs = wedge(a, b);
    Form rhs = wedge(b, a);
    if (((pa + qa) * (pb + qb)) % 2) rhs = -rhs;
    if (lhs != rhs) return fail("wedge graded commutativity", a.str() + " ; " + b.str());
    return std::nullopt;
}

std::optional<std::string> prop_d_squared(PropertyCtx& c) {
    Rng& rng = *c.rng;
    int n = c.n;
    Form a = random_form(rng, n, rng.range(0, n), rng.range(0, n), c.opt);
    if (!ext_d(ext_d(a)).is_zero()) return fail("d d = 0", a.str());
    if (!del(del(a)).is_zero()) return fail("del del = 0", a.str());
    if (!delbar(delbar(a)).is_zero()) return fail("delbar delbar = 0", a.str());
    MixedForm anti = MixedForm(del(delbar(a))) + MixedForm(delbar(del(a)));
    if (!anti.is_zero()) return fail("del delbar + delbar del = 0", a.str());
    return std::nullopt;
}

std::optional<std::string> prop_leibniz(PropertyCtx& c) {
    Rng& rng = *c.rng;
    int n = c.n;
    Form a = random_form(rng, n, rng.range(0, 1), rng.range(0, 1), c.opt);
    Form b = random_form(rng, n, rng.range(0, 1), rng.range(0, 1), c.opt);
    MixedForm lhs = ext_d(wedge(a, b));
    MixedForm rhs = wedge(ext_d(a), MixedForm(b));
    MixedForm adb = wedge(MixedForm(a), ext_d(b));
    if ((a.p() + a.q()) % 2) rhs -= adb;
    else rhs += adb;
    if (lhs != rhs) return fail("Leibniz rule for d", a.str() + " ; " + b.str());

    VectorField10 v = random_vector_field(rng, n, c.opt);
    Form il = contract(v, wedge(a, b));
    Form ra = wedge(contract(v, a), b);
    Form rb = wedge(a, contract(v, b));
    Form rhs2 = ra;
    if ((a.p() + a.q()) % 2) rhs2 -= rb;
    else rhs2 += rb;
    if (il != rhs2) return fail("contraction is a degree -1 derivation", a.str() + " ; " + b.str());
    return std::nullopt;
}

std::optional<std::string> prop_homotopy(PropertyCtx& c) {
    Rng& rng = *c.rng;
    int n = c.n;
    Form a = random_form(rng, n, rng.range(0, n - 1), rng.range(0, n), c.opt);
    MixedForm w(n);
    w.add(del(a));
    if (!w.is_zero()) {
        MixedForm prim = del_primitive(w);
        if (!(del(prim) == w)) return fail("del primitive", a.str());
    }
    MixedForm wb(n);
    wb.add(delbar(a));
    if (!wb.is_zero()) {
        MixedForm prim = delbar_primitive(wb);
        if (!(delbar(prim) == wb)) return fail("delbar primitive", a.str());
    }
    return std::nullopt;
}

std::optional<std::string> prop_bianchi(PropertyCtx& c) {
    Connection theta = random_connection(*c.rng, c.n, c.spec, c.opt);
    LieForm F = curvature(theta);
    if (!cov_d(theta, F).is_zero()) return fail("Bianchi identity", theta.str());
    return std::nullopt;
}

std::optional<std::string> prop_lie_jacobi(PropertyCtx& c) {
    Rng& rng = *c.rng;
    auto pick = [&](int& deg) {
        int p = rng.range(0, 1), q = rng.range(0, 1);
        deg = p + q;
        return random_lie_form(rng, c.n, c.spec, p, q, c.opt);
    };
    int dk, dl, dm;
    LieForm x = pick(dk), y = pick(dl), z = pick(dm);

    LieForm jac = graded_bracket(x, graded_bracket(y, z)).scaled(CRat(Rat((dk * dm) % 2 ? -1 : 1)));
    jac += graded_bracket(y, graded_bracket(z, x)).scaled(CRat(Rat((dl * dk) % 2 ? -1 : 1)));
    jac += graded_bracket(z, graded_bracket(x, y)).scaled(CRat(Rat((dm * dl) % 2 ? -1 : 1)));
    if (!jac.is_zero())
        return fail("graded Jacobi", x.str() + " ; " + y.str() + " ; " + z.str());

    MixedForm adi = pairing_c(x, graded_bracket(y, z));
    MixedForm second = pairing_c(graded_bracket(y, x), z);
    if ((dk * dl) % 2) adi -= second;
    else adi += second;
    if (!adi.is_zero())
        return fail("ad-invariance of c", x.str() + " ; " + y.str() + " ; " + z.str());

    LieForm skew = graded_bracket(x, y);
    LieForm yx = graded_bracket(y, x);
    if ((dk * dl) % 2) skew -= yx;
    else skew += yx;
    if (!skew.is_zero()) return fail("graded skew-commutativity", x.str() + " ; " + y.str());
    return std::nullopt;
}

std::optional<std::string> prop_dcs(PropertyCtx& c) {
    Connection theta = random_connection(*c.rng, c.n, c.spec, c.opt);
    MixedForm lhs = ext_d(chern_simons(theta));
    LieForm F = curvature(theta);
    MixedForm rhs = pairing_c(F, F);
    if (!(lhs == rhs)) return fail("d CS(theta) = c(F^F)", theta.str());
    return std::nullopt;
}

std::optional<std::string> prop_cs_difference(PropertyCtx& c) {
    Rng& rng = *c.rng;
    Connection theta = random_connection(rng, c.n, c.spec, c.opt);
    LieForm a = random_lie_form(rng, c.n, c.spec, 1, 0, c.opt) +
                random_lie_form(rng, c.n, c.spec, 0, 1, c.opt);
    Connection shifted = theta + a;
    MixedForm lhs = chern_simons(shifted);
    lhs -= chern_simons(theta);
    lhs -= ext_d(pairing_c(shifted.full(), theta.full()));
    MixedForm rhs = cs_difference(theta, a);
    if (!(lhs == rhs)) return fail("Chern-Simons basic difference identity",
                                   theta.str() + " ; a = " + a.str());
    return std::nullopt;
}

std::optional<std::string> prop_afg(PropertyCtx& c) {
    Rng& rng = *c.rng;
    GaugeMap f = random_gauge_map(rng, c.n, c.spec, true, c.opt);
    GaugeMap g = random_gauge_map(rng, c.n, c.spec, true, c.opt);
    LieForm lhs = mc_form(f * g);
    LieForm rhs = smat_lmul(g.g_inv(), smat_rmul(mc_form(f), g.g())) + mc_form(g);
    if (!(lhs == rhs)) return fail("a^{fg} = g^{-1} a^f + a^g", f.str() + " ; " + g.str());

    LieForm l2 = f.ad(mc_form(f)) + mc_form(f.inverse());
    if (!l2.is_zero()) return fail("f a^f = -a^{f^{-1}}", f.str());
    return std::nullopt;
}

std::optional<std::string> prop_courant(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData data = random_integrable_data(rng, c.n, c.spec, c.opt);
    SectionQ s1 = random_section(rng, c.n, c.spec, c.opt);
    SectionQ s2 = random_section(rng, c.n, c.spec, c.opt);
    SectionQ s3 = random_section(rng, c.n, c.spec, c.opt);
    Scalar phi = random_scalar(rng, c.n, c.opt);
    CourantReport rep = courant_axioms_residual(data, s1, s2, s3, phi);
    if (!rep.all_zero())
        return fail("Courant axioms on integrable data",
                    data.str() + " ; s1 = " + s1.str() + " ; s2 = " + s2.str() +
                        " ; s3 = " + s3.str());
    return std::nullopt;
}

std::optional<std::string> prop_dolbeault_sq(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData data = random_integrable_data(rng, c.n, c.spec, c.opt);
    SectionQ s = random_section(rng, c.n, c.spec, c.opt);
    QkSection one = dolbeault_Q(data, s);
    QkSection two = dolbeault_Q(data, one);
    if (!two.is_zero()) return fail("dbar_Q^2 = 0 on integrable data", data.str() + " ; " + s.str());

    // converse: break the (2,2)-residual and find a witness section
    Form pert = random_form(rng, c.n, 2, 1, c.opt);
    if (!delbar(pert).is_zero()) {
        StringData broken(data.theta, data.H30, data.H21 + pert);
        bool found = false;
        for (int i = 1; i <= c.n && !found; ++i) {
            SectionQ basis(VectorField10::basis(c.n, i), LieForm(c.n, c.spec), Form(c.n, 1, 0));
            if (!dolbeault_Q(broken, dolbeault_Q(broken, basis)).is_zero()) found = true;
        }
        if (!found) return fail("dbar_Q^2 must detect a broken (2,2) residual", pert.str());
    }
    return std::nullopt;
}

std::optional<std::string> prop_pairing_holomorphic(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData data = random_integrable_data(rng, c.n, c.spec, c.opt);
    SectionQ s1 = random_section(rng, c.n, c.spec, c.opt);
    SectionQ s2 = random_section(rng, c.n, c.spec, c.opt);
    Form lhs = delbar(Form::scalar(pairing_Q(s1, s2)));
    Form rhs = pairing_Qk(dolbeault_Q(data, s1), s2);
    rhs += pairing_Qk(dolbeault_Q(data, s2), s1);
    if (lhs != rhs)
        return fail("dbar <s1,s2> = <dbar_Q s1, s2> + <s1, dbar_Q s2>",
                    data.str() + " ; " + s1.str() + " ; " + s2.str());
    return std::nullopt;
}

std::optional<std::string> prop_morphism_pairing(PropertyCtx& c) {
    Rng& rng = *c.rng;
    MorphismData m(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                   random_lie_form(rng, c.n, c.spec, 1, 0, c.opt),
                   random_form(rng, c.n, 2, 0, c.opt));
    SectionQ s1 = random_section(rng, c.n, c.spec, c.opt);
    SectionQ s2 = random_section(rng, c.n, c.spec, c.opt);
    Scalar lhs = pairing_Q(apply_morphism(m, s1), apply_morphism(m, s2));
    if (lhs != pairing_Q(s1, s2))
        return fail("morphisms preserve the pairing", m.str() + " ; " + s1.str() + " ; " + s2.str());
    return std::nullopt;
}

// iso certificate via the gauge orbit; returns (d, d', morphism).
struct Certificate {
    StringData d;
    StringData dprime;
    MorphismData m;
};

Certificate make_certificate(Rng& rng, int n, const LieAlgebraSpec& spec, const ScalarOpts& opt) {
    StringData d = random_integrable_data(rng, n, spec, opt);
    GaugeMap g = random_gauge_map(rng, n, spec, true, opt);
    LieForm a = random_lie_form(rng, n, spec, 1, 0, opt);
    Form Btilde = random_form(rng, n, 2, 0, opt);
    StringData dprime = gauge_act(GaugeElement(g, a, Btilde), d);
    return Certificate{std::move(d), std::move(dprime), MorphismData(g, a, -Btilde)};
}

std::optional<std::string> prop_morphism_intertwine(PropertyCtx& c) {
    Rng& rng = *c.rng;
    Certificate cert = make_certificate(rng, c.n, c.spec, c.opt);
    MixedForm res = iso_residual(cert.d, cert.dprime, cert.m.g, cert.m.B);
    if (!res.is_zero()) return fail("constructed certificate has iso_residual 0", cert.m.str());

    SectionQ s1 = random_section(rng, c.n, c.spec, c.opt);
    SectionQ s2 = random_section(rng, c.n, c.spec, c.opt);

    SectionQ br = apply_morphism(cert.m, dorfman(cert.d, s1, s2)) -
                  dorfman(cert.dprime, apply_morphism(cert.m, s1), apply_morphism(cert.m, s2));
    if (!br.is_zero()) return fail("morphism intertwines the Dorfman bracket", cert.m.str());

    QkSection dol = apply_morphism(cert.m, dolbeault_Q(cert.d, s1)) -
                    dolbeault_Q(cert.dprime, apply_morphism(cert.m, s1));
    if (!dol.is_zero()) return fail("morphism intertwines the Dolbeault operator", cert.m.str());
    return std::nullopt;
}

std::optional<std::string> prop_morphism_perturbed(PropertyCtx& c) {
    Rng& rng = *c.rng;
    Certificate cert = make_certificate(rng, c.n, c.spec, c.opt);
    Form pert = random_form(rng, c.n, 2, 0, c.opt);
    if (ext_d(pert).is_zero()) return std::nullopt;  // nothing to detect
    MorphismData bad(cert.m.g, cert.m.a, cert.m.B + pert);

    MixedForm res = iso_residual(cert.d, cert.dprime, bad.g, bad.B);
    if (res.is_zero()) return fail("perturbed certificate must fail iso_residual", pert.str());

    SectionQ s1 = random_section(rng, c.n, c.spec, c.opt);
    bool caught = false;
    for (int i = 1; i <= c.n && !caught; ++i) {
        SectionQ s(VectorField10::basis(c.n, i), LieForm(c.n, c.spec), Form(c.n, 1, 0));
        SectionQ br = apply_morphism(bad, dorfman(cert.d, s, s1)) -
                      dorfman(cert.dprime, apply_morphism(bad, s), apply_morphism(bad, s1));
        QkSection dol = apply_morphism(bad, dolbeault_Q(cert.d, s)) -
                        dolbeault_Q(cert.dprime, apply_morphism(bad, s));
        if (!br.is_zero() || !dol.is_zero()) caught = true;
    }
    if (!caught)
        return fail("perturbed certificate must break bracket or Dolbeault intertwining",
                    pert.str());
    return std::nullopt;
}

std::optional<std::string> prop_sproduct_group(PropertyCtx& c) {
    Rng& rng = *c.rng;
    auto el = [&] {
        return AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                          random_form(rng, c.n, 2, 0, c.opt));
    };
    AutElement x = el(), y = el(), z = el();
    AutElement lhs = s_product(s_product(x, y), z);
    AutElement rhs = s_product(x, s_product(y, z));
    if (!(lhs == rhs)) return fail("S product associativity", x.str() + " ; " + y.str() + " ; " + z.str());

    AutElement e(GaugeMap::identity(c.n, c.spec), Form(c.n, 2, 0));
    if (!(s_product(e, x) == x) || !(s_product(x, e) == x))
        return fail("S product identity", x.str());
    AutElement inv = s_inverse(x);
    if (!(s_product(x, inv) == e) || !(s_product(inv, x) == e))
        return fail("S product inverse", x.str());
    return std::nullopt;
}

// Solve dB = c(a^g ^ del a^g) + 1/3 c(a^g,[a^g,a^g]) for holomorphic g at
// the flat connection; the right side is del-exact with holomorphic primitive.
AutElement make_s_member(Rng& rng, int n, const LieAlgebraSpec& spec, const ScalarOpts& opt) {
    GaugeMap g = random_gauge_map(rng, n, spec, true, opt);
    Connection flat = Connection::zero(n, spec);
    LieForm ag = a_of(g, flat);
    MixedForm rhs = pairing_c(ag, cov_d(flat, ag));
    rhs += pairing_c(ag, graded_bracket(ag, ag)).scaled(CRat(Rat(1, 3)));
    Form B(n, 2, 0);
    if (!rhs.is_zero()) B = del_primitive(rhs).component(2, 0);
    return AutElement(std::move(g), std::move(B));
}

std::optional<std::string> prop_sproduct_closure(PropertyCtx& c) {
    Rng& rng = *c.rng;
    Connection flat = Connection::zero(c.n, c.spec);
    AutElement x = make_s_member(rng, c.n, c.spec, c.opt);
    AutElement y = make_s_member(rng, c.n, c.spec, c.opt);
    if (!aut_condition_residual(flat, x.g, x.B).is_zero())
        return fail("constructed S member fails membership", x.str());
    AutElement p = s_product(x, y);
    if (!aut_condition_residual(flat, p.g, p.B).is_zero())
        return fail("S product of members must be a member", x.str() + " ; " + y.str());
    return std::nullopt;
}

std::optional<std::string> prop_coboundary_expansion(PropertyCtx& c) {
    Rng& rng = *c.rng;
    // two charts suffice for the expansion identity
    Cover cov(2, {{1, 2}}, {});
    Cochain1 cc;
    cc.set(1, 2, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                            random_form(rng, c.n, 2, 0, c.opt)));
    Cochain0 h;
    h.set(1, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                        random_form(rng, c.n, 2, 0, c.opt)));
    h.set(2, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                        random_form(rng, c.n, 2, 0, c.opt)));
    Cochain1 acted = coboundary_act(h, cc, cov);

    const GaugeMap& hi = h.at(1).g;
    const GaugeMap& hj = h.at(2).g;
    const GaugeMap gij = cc.at(1, 2).g;
    GaugeMap gji = gij.inverse();
    LieForm ahi = mc_form(hi);
    LieForm ahj = mc_form(hj);
    LieForm aij = mc_form(gij);
    LieForm aji = mc_form(gji);

    Form expect = cc.at(1, 2).B + h.at(1).B - h.at(2).B;
    expect -= pairing_c(ahi, aji).component(2, 0);
    LieForm moved = smat_lmul(gji.g(), smat_rmul(ahi, gji.g_inv()));  // g_ji . a^{h_i}
    expect -= pairing_c(moved + aij, ahj).component(2, 0);

    if (acted.at(1, 2).B != expect)
        return fail("coboundary action expansion",
                    cc.at(1, 2).str() + " ; h1 = " + h.at(1).str() + " ; h2 = " + h.at(2).str());
    if (!(acted.at(1, 2).g == hi * gij * hj.inverse()))
        return fail("coboundary action gauge part", cc.at(1, 2).str());
    return std::nullopt;
}

std::optional<std::string> prop_cech_cocycle(PropertyCtx& c) {
    Rng& rng = *c.rng;
    Cover cov(3, {{1, 2}, {1, 3}, {2, 3}}, {{{1, 2, 3}}});
    // coboundary of the trivial cocycle
    Cochain1 triv;
    AutElement e(GaugeMap::identity(c.n, c.spec), Form(c.n, 2, 0));
    triv.set(1, 2, e);
    triv.set(1, 3, e);
    triv.set(2, 3, e);
    Cochain0 h;
    for (int i = 1; i <= 3; ++i)
        h.set(i, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                            random_form(rng, c.n, 2, 0, c.opt)));
    Cochain1 cb = coboundary_act(h, triv, cov);
    for (auto& [t, res] : cocycle_residual(cb, cov))
        if (!res.is_zero()) return fail("coboundaries are cocycles", cb.at(1, 2).str());

    // action axiom (h h') . c = h . (h' . c)
    Cochain1 cc;
    cc.set(1, 2, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                            random_form(rng, c.n, 2, 0, c.opt)));
    cc.set(1, 3, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                            random_form(rng, c.n, 2, 0, c.opt)));
    cc.set(2, 3, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                            random_form(rng, c.n, 2, 0, c.opt)));
    Cochain0 h2;
    for (int i = 1; i <= 3; ++i)
        h2.set(i, AutElement(random_gauge_map(rng, c.n, c.spec, true, c.opt),
                             random_form(rng, c.n, 2, 0, c.opt)));
    Cochain0 prod;
    for (int i = 1; i <= 3; ++i) prod.set(i, s_product(h.at(i), h2.at(i)));
    Cochain1 lhs = coboundary_act(prod, cc, cov);
    Cochain1 rhs = coboundary_act(h, coboundary_act(h2, cc, cov), cov);
    for (auto& [i, j] : cov.pairs)
        if (!(lhs.at(i, j) == rhs.at(i, j)))
            return fail("coboundary action is a group action", cc.at(i, j).str());
    return std::nullopt;
}

std::optional<std::string> prop_dijk_coboundary(PropertyCtx& c) {
    Rng& rng = *c.rng;
    Cover cov(3, {{1, 2}, {1, 3}, {2, 3}}, {{{1, 2, 3}}});
    // g-closing cocycle from u_i, compatible family theta_i = u_i . theta
    std::vector<GaugeMap> u;
    for (int i = 0; i < 3; ++i) u.push_back(random_gauge_map(rng, c.n, c.spec, true, c.opt));
    Connection base = random_connection_apstyle(rng, c.n, c.spec, c.opt);
    Cochain1 cc;
    std::map<int, Connection> fam;
    for (int i = 1; i <= 3; ++i) fam.emplace(i, gauge_transform(u[i - 1], base));
    for (auto& [i, j] : cov.pairs)
        cc.set(i, j, AutElement(u[i - 1] * u[j - 1].inverse(), random_form(rng, c.n, 2, 0, c.opt)));

    Connection flat = Connection::zero(c.n, c.spec);
    auto a_chart = [&](int i) { return fam.at(i).full() - flat.full(); };
    auto X = [&](int i, int j) {
        Form out = cc.at(i, j).B;
        out -= pairing_c(a_chart(i), a_of(cc.at(j, i).g, flat)).component(2, 0);
        return out;
    };
    auto res = cocycle_residual(cc, cov);
    const TripleResidual& tr = res.at({{1, 2, 3}});
    for (const Scalar& s : tr.g)
        if (!s.is_zero()) return fail("u-built cochain must g-close", u[0].str());
    Form delta = X(2, 3) - X(1, 3) + X(1, 2);
    if (tr.B != delta)
        return fail("d_ijk equals the coboundary of B_ij - c(a_i ^ a_ji)", cc.at(1, 2).str());
    return std::nullopt;
}

std::optional<std::string> prop_dgla_axioms(PropertyCtx& c) {
    Rng& rng = *c.rng;
    ScalarOpts opt = c.opt;
    StringData base = random_integrable_data(rng, c.n, c.spec, opt);
    while (curvature(base.theta).parts().count({2, 0}))
        base = random_integrable_data(rng, c.n, c.spec, opt);

    int dk = rng.range(0, 2), dl = rng.range(0, 2), dm = rng.range(0, 2);
    LElement x = random_lelement(rng, c.n, c.spec, dk, opt);
    LElement y = random_lelement(rng, c.n, c.spec, dl, opt);
    LElement z = random_lelement(rng, c.n, c.spec, dm, opt);

    LElement skew = dgla_bracket(base, x, y);
    LElement yx = dgla_bracket(base, y, x);
    LElement skew_sum = (dk * dl) % 2 ? skew - yx : skew + yx;
    if (!skew_sum.is_zero())
        return fail("DGLA graded skew", x.str() + " ; " + y.str());

    LElement jac =
        dgla_bracket(base, x, dgla_bracket(base, y, z)).scaled(CRat(Rat((dk * dm) % 2 ? -1 : 1)));
    jac = jac + dgla_bracket(base, y, dgla_bracket(base, z, x))
                    .scaled(CRat(Rat((dl * dk) % 2 ? -1 : 1)));
    jac = jac + dgla_bracket(base, z, dgla_bracket(base, x, y))
                    .scaled(CRat(Rat((dm * dl) % 2 ? -1 : 1)));
    if (!jac.is_zero()) return fail("DGLA graded Jacobi", x.str() + " ; " + y.str() + " ; " + z.str());

    if (!d_Q(base, d_Q(base, x)).is_zero()) return fail("d_Q d_Q = 0", base.str() + " ; " + x.str());

    LElement lhs = d_Q(base, dgla_bracket(base, x, y));
    LElement rhs = dgla_bracket(base, d_Q(base, x), y);
    LElement xy = dgla_bracket(base, x, d_Q(base, y));
    rhs = (dk % 2) ? rhs - xy : rhs + xy;
    if (!(lhs - rhs).is_zero())
        return fail("d_Q is a degree-1 derivation", base.str() + " ; " + x.str() + " ; " + y.str());
    return std::nullopt;
}

std::optional<std::string> prop_mc_bridge(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData base = random_integrable_data(rng, c.n, c.spec, c.opt);
    while (curvature(base.theta).parts().count({2, 0}))
        base = random_integrable_data(rng, c.n, c.spec, c.opt);
    GaugeElement gamma = random_gauge_element(rng, c.n, c.spec, false, c.opt);
    LElement w = gauge_orbit_mc_witness(base, gamma);
    if (!mc_residual(base, w).is_zero())
        return fail("gauge-orbit witness satisfies Maurer-Cartan", gamma.str());
    StringData def = deformed_data(base, w);
    if (!integrability_residual(def).is_zero())
        return fail("deformed data of an MC witness is integrable", gamma.str());
    LieForm fdiff = curvature(def.theta) - curvature(base.theta);
    fdiff -= del_theta(base.theta, w.alpha);
    if (!fdiff.is_zero()) return fail("F_{theta+alpha} = F + del^theta alpha", w.str());

    // non-MC element: break the b-part; residual should map exactly to the
    // deformed-data integrability defect (with opposite sign).
    Form extra = random_form(rng, c.n, 2, 1, c.opt);
    if (!delbar(extra).is_zero()) {
        MixedForm b2 = w.b;
        b2 += MixedForm(extra);
        LElement bad(1, w.alpha, b2);
        LElement res = mc_residual(base, bad);
        if (res.is_zero()) return fail("broken witness must violate Maurer-Cartan", extra.str());
        StringData forced = deformed_data(base, bad, /*force=*/true);
        IntegrabilityResidual ir = integrability_residual(forced);
        MixedForm total = ir.r40 + ir.r31 + ir.r22;
        if (!(total + res.b).is_zero())
            return fail("deformed-data residual equals minus the MC b-residual", extra.str());
    }
    return std::nullopt;
}

std::optional<std::string> prop_obstruction_phi(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData base = random_integrable_data(rng, c.n, c.spec, c.opt);
    while (curvature(base.theta).parts().count({2, 0}))
        base = random_integrable_data(rng, c.n, c.spec, c.opt);

    LieForm beta = random_lie_form(rng, c.n, c.spec, 0, 0, c.opt);
    LieForm alpha = delbar_theta(base.theta, beta);
    MixedForm rep = obstruction_rep(base, alpha);
    if (!ext_d(rep).is_zero()) return fail("obstruction representative is closed", alpha.str());

    LElement x = random_lelement(rng, c.n, c.spec, 1, c.opt);
    TangentPair deps(-x.b, x.alpha);
    LElement round = phi_map(base, deps);
    if (!(round - x).is_zero()) return fail("phi after d hat-epsilon is the identity", x.str());

    LieForm al0 = random_lie_form(rng, c.n, c.spec, 0, 0, c.opt);
    LieForm a = random_lie_form(rng, c.n, c.spec, 1, 0, c.opt);
    Form b = random_form(rng, c.n, 2, 0, c.opt);
    TangentPair L = infinitesimal_action(base, al0, a, b);
    // phi(L(alpha,a,b)) = -d_Q(alpha, b)
    MixedForm bb(c.n);
    bb.add(b);
    LElement sum = phi_map(base, L) + d_Q(base, LElement(0, al0, bb));
    if (!sum.is_zero()) return fail("phi of the infinitesimal action is -d_Q", al0.str());

    auto [t1, t2] = tangent_integrability_residual(base, L);
    if (!t1.is_zero() || !t2.is_zero())
        return fail("infinitesimal action lands in the integrable tangent space", al0.str());
    if (!d_Q(base, phi_map(base, L)).is_zero())
        return fail("phi maps integrable tangents into ker d_Q", al0.str());
    return std::nullopt;
}

std::optional<std::string> prop_gauge_action(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData p = random_integrable_data(rng, c.n, c.spec, c.opt);
    GaugeElement x = random_gauge_element(rng, c.n, c.spec, false, c.opt);
    GaugeElement y = random_gauge_element(rng, c.n, c.spec, false, c.opt);

    StringData lhs = gauge_act(gauge_product(x, y), p);
    StringData rhs = gauge_act(x, gauge_act(y, p));
    if (!(lhs == rhs)) return fail("(xy).p = x.(y.p)", x.str() + " ; " + y.str());

    GaugeElement e = GaugeElement::identity(c.n, c.spec);
    if (!(gauge_act(e, p) == p)) return fail("identity acts trivially", p.str());

    if (!integrability_residual(gauge_act(x, p)).is_zero())
        return fail("gauge action preserves integrability", x.str());
    return std::nullopt;
}

std::optional<std::string> prop_infinitesimal_dual(PropertyCtx& c) {
    Rng& rng = *c.rng;
    StringData base = random_integrable_data(rng, c.n, c.spec, c.opt);
    LieForm alpha = random_lie_form(rng, c.n, c.spec, 0, 0, c.opt);
    LieForm a = random_lie_form(rng, c.n, c.spec, 1, 0, c.opt);
    Form b = random_form(rng, c.n, 2, 0, c.opt);
    auto [hres, tres] = infinitesimal_consistency_residual(base, alpha, a, b);
    if (!hres.is_zero() || !tres.is_zero())
        return fail("dual-number derivative of the gauge action matches L", alpha.str());
    return std::nullopt;
}

std::optional<std::string> prop_sigma(PropertyCtx& c) {
    Rng& rng = *c.rng;
    GaugeMap g = random_gauge_map(rng, c.n, c.spec, true, c.opt);
    GaugeMap gp = random_gauge_map(rng, c.n, c.spec, true, c.opt);
    Connection theta = random_connection_apstyle(rng, c.n, c.spec, c.opt);

    MixedForm s = sigma_rep(g, theta);
    if (!ext_d(s).is_zero()) return fail("sigma representative is closed", g.str());

    MixedForm comp = sigma_rep(g * gp, theta);
    comp -= sigma_rep(g, theta);
    comp -= sigma_rep(gp, theta);
    LieForm th = theta.full();
    LieForm gth = gauge_transform(g, theta).full();
    LieForm ggpth = gauge_transform(g * gp, theta).full();
    MixedForm pot = pairing_c(ggpth, gth);
    pot -= pairing_c(ggpth, th);
    pot += pairing_c(gth, th);
    comp -= ext_d(pot);
    if (!comp.is_zero())
        return fail("sigma composition differs by the explicit exact potential",
                    g.str() + " ; " + gp.str());
    return std::nullopt;
}

std::optional<std::string> prop_roundtrip(PropertyCtx& c) {
    Rng& rng = *c.rng;
    ScalarOpts opt = c.opt;
    opt.rational = true;
    Scalar s = random_scalar(rng, c.n, opt);
    if (parse_scalar(s.str(), c.n) != s) return fail("scalar print/parse round-trip", s.str());
    Form f = random_form(rng, c.n, rng.range(0, c.n), rng.range(0, c.n), opt);
    Form back = parse_form(f.str(), c.n, f.p(), f.q());
    if (back != f) return fail("form print/parse round-trip", f.str());
    return std::nullopt;
}

}  // namespace

const std::vector<Property>& property_suite() {
    static const std::vector<Property> suite = {
        {"wedge-graded-commutativity", prop_wedge_comm},
        {"differential-squares-vanish", prop_d_squared},
        {"leibniz-and-contraction-derivation", prop_leibniz},
        {"poincare-homotopy", prop_homotopy},
        {"bianchi", prop_bianchi},
        {"lie-jacobi-ad-invariance", prop_lie_jacobi},
        {"d-chern-simons", prop_dcs},
        {"chern-simons-difference", prop_cs_difference},
        {"maurer-cartan-cocycle-identities", prop_afg},
        {"courant-axioms", prop_courant},
        {"dolbeault-square", prop_dolbeault_sq},
        {"pairing-holomorphicity", prop_pairing_holomorphic},
        {"morphism-pairing", prop_morphism_pairing},
        {"morphism-intertwining", prop_morphism_intertwine},
        {"morphism-perturbation-detected", prop_morphism_perturbed},
        {"s-product-group-laws", prop_sproduct_group},
        {"s-product-closure", prop_sproduct_closure},
        {"coboundary-expansion", prop_coboundary_expansion},
        {"cech-cocycle-coboundary", prop_cech_cocycle},
        {"dijk-as-coboundary", prop_dijk_coboundary},
        {"dgla-axioms", prop_dgla_axioms},
        {"mc-integrability-bridge", prop_mc_bridge},
        {"obstruction-and-phi", prop_obstruction_phi},
        {"gauge-action", prop_gauge_action},
        {"infinitesimal-dual-numbers", prop_infinitesimal_dual},
        {"sigma-representative", prop_sigma},
        {"text-round-trip", prop_roundtrip},
    };
    return suite;
}

namespace {

std::optional<std::string> run_case(const Property& prop, std::uint64_t seed, int case_idx,
                                    int max_n, int max_k, int max_degree) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t)(case_idx + 1)));
    PropertyCtx ctx{&rng, rng.range(1, max_n), random_spec(rng, max_k), ScalarOpts{}};
    ctx.opt.max_degree = rng.range(0, max_degree);
    ctx.opt.terms = rng.range(1, 2);
    return prop.run(ctx);
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
    FuzzReport report;
    const auto& suite = property_suite();
    for (int i = 0; i < cfg.cases; ++i) {
        const Property& prop = suite[i % suite.size()];
        std::optional<std::string> failure =
            run_case(prop, cfg.seed, i, cfg.max_n, cfg.max_k, cfg.max_degree);
        ++report.cases_run;
        if (!failure) continue;

        // shrink: retry the same property at smaller generation bounds
        std::string witness = *failure;
        bool shrunk = false;
        for (int nn = 1; nn <= cfg.max_n && !shrunk; ++nn)
            for (int kk = 1; kk <= cfg.max_k && !shrunk; ++kk)
                for (int dd = 0; dd <= cfg.max_degree && !shrunk; ++dd)
                    for (int attempt = 0; attempt < 40 && !shrunk; ++attempt) {
                        auto small = run_case(prop, cfg.seed + 7919 * (attempt + 1), i, nn, kk, dd);
                        if (small) {
                            witness = *small + "\n  (shrunk to n=" + std::to_string(nn) +
                                      ", k=" + std::to_string(kk) +
                                      ", degree<=" + std::to_string(dd) + ")";
                            shrunk = true;
                        }
                    }
        report.failures.push_back(FuzzFailure{prop.name, i, witness});
        if (cfg.stop_on_fail) break;
    }
    return report;
}

}  // namespace salab
