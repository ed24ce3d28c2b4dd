#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace salab;
using ts::F;
using ts::M;
using ts::S;
using ts::VF;

TEST_CASE("gaussian rational arithmetic is exact") {
    CRat a{Rat(3, 2), Rat(1, 3)};
    CRat b{Rat(-1, 2), Rat(2, 3)};
    CRat prod = a * b;
    CHECK(prod == CRat(Rat(-3, 4) - Rat(2, 9), Rat(1) - Rat(1, 6)));
    CHECK(crat_str(a) == "3/2+1/3i");
    CHECK(crat_str(CRat(Rat(0), Rat(-2))) == "-2i");
}

TEST_CASE("scalar ring basics") {
    int n = 2;
    Scalar z1 = Scalar::coord(n, 1);
    Scalar zb1 = Scalar::coord_bar(n, 1);
    Scalar f = z1 * z1 * zb1;
    CHECK(f == S("z1^2*zb1", n));
    CHECK(f.dz(1) == S("2*z1*zb1", n));
    CHECK(f.dzb(1) == S("z1^2", n));
    CHECK(f.dz(2).is_zero());
    CHECK((f - f).is_zero());

    // eps is nilpotent
    Scalar e = Scalar::eps(n);
    CHECK((e * e).is_zero());
    CHECK((z1 + e) * (z1 - e) == z1 * z1);
}

TEST_CASE("scalar text round-trip") {
    int n = 2;
    Rng rng(7);
    ScalarOpts opt;
    opt.max_degree = 4;
    opt.terms = 5;
    opt.rational = true;
    opt.allow_eps = true;
    for (int i = 0; i < 200; ++i) {
        Scalar s = random_scalar(rng, n, opt);
        CHECK(parse_scalar(s.str(), n) == s);
    }
    CHECK(S("(3/2+1/3i)*z1^2*zb1", n).str() == "(3/2+1/3i)*z1^2*zb1");
    CHECK(S("0", n).is_zero());
}

TEST_CASE("wedge: repeated index, basis product, sign") {
    int n = 2;
    Form dz1 = F("dz1", n, 1, 0);
    CHECK(wedge(dz1, dz1).is_zero());

    Form dzb1 = F("dzb1", n, 0, 1);
    CHECK(wedge(dz1, dzb1) == F("dz1^dzb1", n, 1, 1));

    // (z1 dzb1) ^ dz1 = -z1 dz1^dzb1
    Form a = F("z1*dzb1", n, 0, 1);
    CHECK(wedge(a, dz1) == F("-z1*dz1^dzb1", n, 1, 1));
}

TEST_CASE("exterior differential examples") {
    int n = 2;
    CHECK(ext_d(Form::scalar(S("z1*zb1", n))) == M("zb1*dz1 + z1*dzb1", n));
    CHECK(delbar(F("z1^2*dz2", n, 1, 0)).is_zero());

    // d(df) = 0 for random f, checked against the mixed-partials oracle
    Rng rng(11);
    ScalarOpts opt;
    opt.max_degree = 4;
    opt.terms = 4;
    for (int i = 0; i < 50; ++i) {
        Scalar f = random_scalar(rng, n, opt);
        CHECK(ext_d(ext_d(Form::scalar(f))).is_zero());
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                CHECK(f.dz(a).dz(b) == f.dz(b).dz(a));
                CHECK(f.dz(a).dzb(b) == f.dzb(b).dz(a));
                CHECK(f.dzb(a).dzb(b) == f.dzb(b).dzb(a));
            }
    }
}

TEST_CASE("contraction examples") {
    int n = 2;
    VectorField10 e1 = VectorField10::basis(n, 1);
    CHECK(contract(e1, F("dz1^dz2", n, 2, 0)) == F("dz2", n, 1, 0));
    CHECK(contract(e1, F("dzb1", n, 0, 1)).is_zero());

    VectorField10 v = VF(n, {"z2", "0"});
    CHECK(contract(v, F("dz1", n, 1, 0)) == Form::scalar(S("z2", n)));

    // i_V i_V = 0
    Rng rng(3);
    ScalarOpts opt;
    for (int i = 0; i < 40; ++i) {
        VectorField10 w = random_vector_field(rng, n, opt);
        Form a = random_form(rng, n, 2, 1, opt);
        CHECK(contract(w, contract(w, a)).is_zero());
    }
}

TEST_CASE("lie derivative via the Cartan formula") {
    int n = 2;
    VectorField10 e1 = VectorField10::basis(n, 1);
    CHECK(lie_derivative(e1, F("z1*dz2", n, 1, 0)) == M("dz2", n));

    VectorField10 ze1 = VF(n, {"z1", "0"});
    CHECK(lie_derivative(ze1, F("dz1", n, 1, 0)) == M("dz1", n));

    // constant coefficients, constant field
    CHECK(lie_derivative(e1, Form::scalar(S("5", n))).is_zero());
}

TEST_CASE("graded commutativity, Leibniz, derivation properties") {
    ScalarOpts opt;
    opt.max_degree = 4;
    for (int n = 1; n <= 3; ++n) {
        Rng rng(100 + n);
        for (int i = 0; i < 34; ++i) {
            int pa = rng.range(0, n), qa = rng.range(0, n);
            int pb = rng.range(0, n), qb = rng.range(0, n);
            Form a = random_form(rng, n, pa, qa, opt);
            Form b = random_form(rng, n, pb, qb, opt);

            Form comm = wedge(a, b);
            Form rev = wedge(b, a);
            if (((pa + qa) * (pb + qb)) % 2)
                comm += rev;
            else
                comm -= rev;
            CHECK(comm.is_zero());

            MixedForm leib = ext_d(wedge(a, b));
            leib -= wedge(ext_d(a), MixedForm(b));
            MixedForm adb = wedge(MixedForm(a), ext_d(b));
            if ((pa + qa) % 2)
                leib += adb;
            else
                leib -= adb;
            CHECK(leib.is_zero());

            VectorField10 v = random_vector_field(rng, n, opt);
            Form der = contract(v, wedge(a, b));
            der -= wedge(contract(v, a), b);
            Form avb = wedge(a, contract(v, b));
            if ((pa + qa) % 2)
                der += avb;
            else
                der -= avb;
            CHECK(der.is_zero());
        }
    }
}

TEST_CASE("differential identities on random forms") {
    ScalarOpts opt;
    opt.max_degree = 4;
    int checked = 0;
    for (int n = 1; n <= 3; ++n) {
        Rng rng(500 + n);
        for (int i = 0; i < 40; ++i) {
            Form a = random_form(rng, n, rng.range(0, n), rng.range(0, n), opt);
            CHECK(ext_d(ext_d(a)).is_zero());
            CHECK(del(del(a)).is_zero());
            CHECK(delbar(delbar(a)).is_zero());
            MixedForm anti = MixedForm(del(delbar(a))) + MixedForm(delbar(del(a)));
            CHECK(anti.is_zero());
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("poincare homotopies invert del and delbar") {
    ScalarOpts opt;
    opt.max_degree = 3;
    for (int n = 1; n <= 3; ++n) {
        Rng rng(900 + n);
        for (int i = 0; i < 25; ++i) {
            Form a = random_form(rng, n, rng.range(0, n - 1), rng.range(0, n), opt);
            MixedForm w(n);
            w.add(del(a));
            if (!w.is_zero()) CHECK(del(del_primitive(w)) == w);
            MixedForm wb(n);
            wb.add(delbar(a));
            if (!wb.is_zero()) CHECK(delbar(delbar_primitive(wb)) == wb);
        }
    }
    // z-constant (0,q) components are rejected
    MixedForm bad(Form::scalar(S("1", 2)));
    CHECK_THROWS_AS(del_primitive(bad), TypeError);
}

TEST_CASE("degree overflow yields the zero form") {
    int n = 2;
    Form a = F("dz1^dz2", n, 2, 0);
    Form b = F("dz1", n, 1, 0);
    CHECK(wedge(a, b).is_zero());
    CHECK(wedge(a, b).p() == 3);
}

TEST_CASE("form text round-trip") {
    int n = 2;
    Rng rng(13);
    ScalarOpts opt;
    opt.max_degree = 3;
    opt.terms = 3;
    opt.rational = true;
    for (int i = 0; i < 100; ++i) {
        Form f = random_form(rng, n, rng.range(0, 2), rng.range(0, 2), opt);
        CHECK(parse_form(f.str(), n, f.p(), f.q()) == f);
    }
    CHECK(M("dz1^dzb2", 2).str() == "dz1^dzb2");
    CHECK_THROWS_AS(M("dz5", 2), ParseError);
    CHECK_THROWS_AS(M("w1", 2), ParseError);
    CHECK_THROWS_AS(M("z1 +", 2), ParseError);
}

TEST_CASE("mixed form bookkeeping") {
    int n = 2;
    MixedForm m = M("dz1^dz2 + z1*dz1^dzb1", n);
    CHECK(m.parts().size() == 2);
    CHECK(m.component(2, 0) == F("dz1^dz2", n, 2, 0));
    CHECK(m.in_omega_leq(0) == false);  // mixed total degrees
    MixedForm h = M("z1*dz1^dz2", n);
    CHECK(h.in_omega_leq(0));
    CHECK(!MixedForm(F("dz1^dzb1", n, 1, 1)).in_omega_leq(0));
}

TEST_CASE("vector field bracket") {
    int n = 2;
    VectorField10 v = VF(n, {"z1", "0"});
    VectorField10 w = VF(n, {"0", "z1*z2"});
    VectorField10 br = vf_bracket(v, w);
    // [z1 d1, z1 z2 d2] = z1 z2 d2
    CHECK(br == VF(n, {"0", "z1*z2"}));
    // brackets of (1,0) fields stay (1,0) even with zbar coefficients
    VectorField10 u = VF(n, {"zb1", "0"});
    CHECK(vf_bracket(u, v) == VF(n, {"zb1", "0"}));
}
