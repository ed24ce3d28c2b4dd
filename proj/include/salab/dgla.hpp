#pragma once

#include "salab/algebroid.hpp"

namespace salab {

// Degree-k element (alpha, b) of the deformation complex
// L_Q^k = Omega^{0,k}(ad P) x Omega^{<=k}.
struct LElement {
    int degree = 0;
    LieForm alpha;  // (0,k)
    MixedForm b;    // components (j+2, k-j)

    LElement(int k, LieForm a, MixedForm bb);
    static LElement zero(int k, int n, const LieAlgebraSpec& spec) {
        return LElement(k, LieForm(n, spec), MixedForm(n));
    }

    int dim() const { return alpha.dim(); }
    bool is_zero() const { return alpha.is_zero() && b.is_zero(); }

    friend LElement operator+(const LElement& x, const LElement& y);
    friend LElement operator-(const LElement& x, const LElement& y);
    friend bool operator==(const LElement& x, const LElement& y) {
        return x.degree == y.degree && x.alpha == y.alpha && x.b == y.b;
    }

    LElement scaled(const CRat& c) const { return LElement(degree, alpha.scaled(c), b.scaled(c)); }

    std::string str() const;
};

// Element (g, a, B) of the gauge group G; g need not be holomorphic.
struct GaugeElement {
    GaugeMap g;
    LieForm a;  // (1,0)
    Form B;     // (2,0)

    GaugeElement(GaugeMap gg, LieForm aa, Form bb);
    static GaugeElement identity(int n, const LieAlgebraSpec& spec) {
        return GaugeElement(GaugeMap::identity(n, spec), LieForm(n, spec), Form(n, 2, 0));
    }
    std::string str() const;
};

// Tangent vector (Hdot, thetadot) of the parameter space at (H, theta).
struct TangentPair {
    MixedForm Hdot;     // Omega^{<=1}
    LieForm thetadot;   // 1-form, mixed type

    TangentPair(MixedForm h, LieForm t);
    std::string str() const;
};

// Requires F(theta) of pure type (1,1); throws BadCurvatureType otherwise.
LieForm require_f11(const StringData& base);

// d_Q(alpha, b) = (dbar^theta alpha, db - 2c(del^theta alpha ^ F)).
LElement d_Q(const StringData& base, const LElement& x);

// [(alpha,b), (alpha',b')] = ([alpha,alpha'], (-1)^k 2c(del^theta alpha ^ del^theta alpha')).
LElement dgla_bracket(const StringData& base, const LElement& x, const LElement& y);

// d_Q x + 1/2 [x,x] for degree-1 x.
LElement mc_residual(const StringData& base, const LElement& x);

// (theta + alpha, H - b); throws MCViolated unless the MC residual vanishes
// or force is set (to inspect broken data).
StringData deformed_data(const StringData& base, const LElement& x, bool force = false);

// 2c(del^theta alpha ^ F) for a dbar^theta-cocycle alpha in Omega^{0,1}(ad P).
MixedForm obstruction_rep(const StringData& base, const LieForm& alpha);

// (g,a,B)(g',a',B') = (gg', g'^{-1}.a + a', B + B' + c((g'^{-1}.a) ^ a')).
GaugeElement gauge_product(const GaugeElement& x, const GaugeElement& y);

// (g,a,B).(H,theta) = (H + dB + CS(theta) - CS(theta+a) - dc(theta ^ a), g(theta+a)).
StringData gauge_act(const GaugeElement& x, const StringData& p);

// L(alpha,a,b) = (db - 2c(a ^ F), -d^theta alpha + a).
TangentPair infinitesimal_action(const StringData& base, const LieForm& alpha, const LieForm& a,
                                 const Form& b);

// First-order match of gauge_act along (1 + eps alpha, eps a, eps b) against
// L(alpha,a,b), computed with the nilpotent eps. Returns (H-slot residual,
// theta-slot residual); both zero exactly.
std::pair<MixedForm, LieForm> infinitesimal_consistency_residual(const StringData& base,
                                                                 const LieForm& alpha,
                                                                 const LieForm& a, const Form& b);

// hat_epsilon(alpha, b) = (H - b, theta + alpha); no integrability demanded.
StringData hat_epsilon(const StringData& base, const LElement& x);

// phi(Hdot, thetadot) = (thetadot^{0,1}, -Hdot - 2c(thetadot^{1,0} ^ F)).
LElement phi_map(const StringData& base, const TangentPair& t);

// Residuals of the linearized integrability equations
// (dbar^theta thetadot^{0,1}, d(Hdot + 2c(thetadot ^ F))).
std::pair<LieForm, MixedForm> tangent_integrability_residual(const StringData& base,
                                                             const TangentPair& t);

}  // namespace salab
