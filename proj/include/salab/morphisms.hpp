#pragma once

#include "salab/algebroid.hpp"

namespace salab {

// Data of a morphism f_g(B,a) between split-model string algebroids.
struct MorphismData {
    GaugeMap g;     // holomorphic
    LieForm a;      // (1,0)
    Form B;         // (2,0)

    MorphismData(GaugeMap gg, LieForm aa, Form bb);
    std::string str() const;
};

// Automorphism-group element (g, B) of the sheaf S over the chart.
struct AutElement {
    GaugeMap g;  // holomorphic
    Form B;      // (2,0)

    AutElement(GaugeMap gg, Form bb);

    friend bool operator==(const AutElement& a, const AutElement& b) {
        return a.g == b.g && a.B == b.B;
    }

    std::string str() const;
};

// phi(V + r + xi) = V + g(r + i_V a) + xi + i_V(B - c(a,a)) - 2c(a,r);
// c(a,a) acts as the symmetric tensor, i_V c(a,a) = c(i_V a, a).
SectionQ apply_morphism(const MorphismData& m, const SectionQ& s);
// Extension to Omega^{0,k}-valued sections (used for Dolbeault intertwining).
QkSection apply_morphism(const MorphismData& m, const QkSection& s);

// H' - H + 2c(a,F) + c(a,d^theta a) + 1/3 c(a,[a,a]) + dB with
// a = g^{-1} theta' - theta. Zero iff (g,B) certifies an isomorphism.
// Throws TypeError when a has a (0,1)-part (g is not a bundle map P -> P').
MixedForm iso_residual(const StringData& d, const StringData& dprime, const GaugeMap& g,
                       const Form& B);

// dB - 2c(a^g,F) - c(a^g,d^theta a^g) - 1/3 c(a^g,[a^g,a^g]).
MixedForm aut_condition_residual(const Connection& theta, const GaugeMap& g, const Form& B);

// Group law of S: (g1,B1)(g2,B2) = (g1 g2, B1 + B2 + c(g2^{-1} a^{g1} ^ a^{g2})).
AutElement s_product(const AutElement& x, const AutElement& y);
// Two-sided inverse; the pairing correction vanishes identically, so this is
// (g^{-1}, -B). Verified against the product equation in the tests.
AutElement s_inverse(const AutElement& x);

}  // namespace salab
