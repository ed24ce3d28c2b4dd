#pragma once

#include "salab/lie.hpp"

namespace salab {

// Classifying data (H, theta) of the split-model string algebroid Q0 on the
// chart: H = H30 + H21 in Omega^{<=1}, theta a connection with F^{0,2} = 0
// when the data is integrable.
struct StringData {
    Connection theta;
    Form H30;  // (3,0)
    Form H21;  // (2,1)

    StringData() = default;
    StringData(Connection t, Form h30, Form h21);

    int dim() const { return theta.dim(); }
    const LieAlgebraSpec& spec() const { return theta.spec(); }
    MixedForm H() const;

    friend bool operator==(const StringData& a, const StringData& b) {
        return a.theta == b.theta && a.H30 == b.H30 && a.H21 == b.H21;
    }

    std::string str() const;
};

// Section of Q0 = T^{1,0} + ad P + (T^{1,0})^*.
struct SectionQ {
    VectorField10 V;
    LieForm r;   // (0,0)
    Form xi;     // (1,0)

    SectionQ() = default;
    SectionQ(VectorField10 v, LieForm r0, Form x);

    static SectionQ zero(int n, const LieAlgebraSpec& spec) {
        return SectionQ(VectorField10(n), LieForm(n, spec), Form(n, 1, 0));
    }

    int dim() const { return V.dim(); }
    bool is_zero() const { return V.is_zero() && r.is_zero() && xi.is_zero(); }

    SectionQ& operator+=(const SectionQ& o);
    SectionQ& operator-=(const SectionQ& o);
    friend SectionQ operator+(SectionQ a, const SectionQ& b) { return a += b; }
    friend SectionQ operator-(SectionQ a, const SectionQ& b) { return a -= b; }
    friend SectionQ operator-(const SectionQ& a);
    friend bool operator==(const SectionQ& a, const SectionQ& b) {
        return a.V == b.V && a.r == b.r && a.xi == b.xi;
    }
    friend bool operator!=(const SectionQ& a, const SectionQ& b) { return !(a == b); }

    SectionQ scaled(const Scalar& f) const;

    std::string str() const;
};

// Section with values in Omega^{0,k}: the image space of the k-fold
// Dolbeault operator. k = 0 recovers SectionQ.
struct QkSection {
    int k = 0;
    std::vector<Form> V;  // n coefficients of d/dz_i, each (0,k)
    LieForm r;            // (0,k)
    Form xi;              // (1,k)

    QkSection() = default;
    QkSection(int k, std::vector<Form> v, LieForm r0, Form x);
    static QkSection from_section(const SectionQ& s);

    int dim() const { return r.dim(); }
    bool is_zero() const;

    friend QkSection operator-(QkSection a, const QkSection& b);
    friend bool operator==(const QkSection& a, const QkSection& b) {
        return a.k == b.k && a.V == b.V && a.r == b.r && a.xi == b.xi;
    }

    std::string str() const;
};

// The three type components of dH + c(F^F); all zero iff (H,theta) defines
// a string algebroid. Throws NonIntegrableConnection when F^{0,2} != 0.
struct IntegrabilityResidual {
    MixedForm r40;  // del H30 + c(F20 ^ F20)
    MixedForm r31;  // delbar H30 + del H21 + 2 c(F20 ^ F11)
    MixedForm r22;  // delbar H21 + c(F11 ^ F11)
    bool is_zero() const { return r40.is_zero() && r31.is_zero() && r22.is_zero(); }
};
IntegrabilityResidual integrability_residual(const StringData& d);

// <s1,s2> = 1/2 (xi1(V2) + xi2(V1)) + c(r1, r2).
Scalar pairing_Q(const SectionQ& s1, const SectionQ& s2);

VectorField10 anchor(const SectionQ& s);

struct APSection {
    VectorField10 V;
    LieForm r;
};
APSection rho0(const SectionQ& s);

// dbar_0 of eq-style matrix form; raises the Omega^{0,k} leg by one.
QkSection dolbeault_Q(const StringData& d, const QkSection& s);
QkSection dolbeault_Q(const StringData& d, const SectionQ& s);

// Dorfman bracket of the split model.
SectionQ dorfman(const StringData& d, const SectionQ& s1, const SectionQ& s2);

// Pairing of a level-k section against an ordinary one, valued in (0,k).
Form pairing_Qk(const QkSection& x, const SectionQ& s);

// Residuals of the five Courant axioms on explicit sections. All are exact
// zero objects when the data is integrable.
struct CourantReport {
    SectionQ d1;        // Jacobi (Leibniz form)
    VectorField10 d2;   // anchor compatibility
    SectionQ d3;        // module rule with the function phi
    Scalar d4;          // invariance of the pairing
    SectionQ d5;        // symmetric part vs d<.,.>
    bool all_zero() const {
        return d1.is_zero() && d2.is_zero() && d3.is_zero() && d4.is_zero() && d5.is_zero();
    }
};
CourantReport courant_axioms_residual(const StringData& d, const SectionQ& s1, const SectionQ& s2,
                                      const SectionQ& s3, const Scalar& phi);

}  // namespace salab
