#pragma once

#include <map>
#include <utility>
#include <vector>

#include "salab/scalar.hpp"

namespace salab {

using Bidegree = std::pair<int, int>;

// Basis label dz_{I} ^ dzb_{J}, both tuples strictly increasing and 1-based.
struct FormKey {
    std::vector<int> I;
    std::vector<int> J;
    friend bool operator<(const FormKey& a, const FormKey& b) {
        if (a.I != b.I) return a.I < b.I;
        return a.J < b.J;
    }
    friend bool operator==(const FormKey& a, const FormKey& b) { return a.I == b.I && a.J == b.J; }
};

// Sorts idx in place counting transpositions; returns 0 on a repeated index,
// otherwise the sign of the permutation.
int sort_sign(std::vector<int>& idx);

class MixedForm;
class VectorField10;

// Pure (p,q)-form with Scalar coefficients, stored sparsely on the canonical
// basis dz^I ^ dzb^J. p or q exceeding n is legal and simply forces zero.
class Form {
public:
    Form() = default;
    Form(int n, int p, int q) : n_(n), p_(p), q_(q) {}

    static Form scalar(const Scalar& s) {
        Form f(s.dim(), 0, 0);
        if (!s.is_zero()) f.c_[FormKey{}] = s;
        return f;
    }
    // Unit-coefficient basis form; I, J may arrive unsorted (sign applied).
    static Form basis(int n, std::vector<int> I, std::vector<int> J);

    int dim() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int total_degree() const { return p_ + q_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<FormKey, Scalar>& terms() const { return c_; }

    // Accumulates s * dz^I ^ dzb^J; I and J may be unsorted, repeated indices
    // drop the term. Degrees must match (p_, q_).
    void add_term(std::vector<int> I, std::vector<int> J, const Scalar& s);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(const Form& a);
    friend bool operator==(const Form& a, const Form& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Form scaled(const Scalar& s) const;
    Form scaled(const CRat& c) const;

    // The unique coefficient of a (0,0)-form.
    Scalar scalar_value() const;

    std::string str() const;

private:
    friend Form wedge(const Form&, const Form&);
    friend class MixedForm;

    int n_ = 0, p_ = 0, q_ = 0;
    std::map<FormKey, Scalar> c_;
};

Form wedge(const Form& a, const Form& b);

// Finite sum of pure-type forms, keyed by bidegree; zero components are not
// stored. This is the value type of d, CS forms and everything mixed.
class MixedForm {
public:
    MixedForm() = default;
    explicit MixedForm(int n) : n_(n) {}
    MixedForm(const Form& f) : n_(f.dim()) { add(f); }

    int dim() const { return n_; }
    bool is_zero() const { return parts_.empty(); }
    const std::map<Bidegree, Form>& parts() const { return parts_; }

    void add(const Form& f);
    Form component(int p, int q) const;

    MixedForm& operator+=(const MixedForm& o);
    MixedForm& operator-=(const MixedForm& o);
    friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
    friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
    friend MixedForm operator-(const MixedForm& a);
    friend bool operator==(const MixedForm& a, const MixedForm& b) {
        return a.n_ == b.n_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const MixedForm& a, const MixedForm& b) { return !(a == b); }

    MixedForm scaled(const Scalar& s) const;
    MixedForm scaled(const CRat& c) const;

    // True when every component sits in Omega^{<=k}: holomorphic degree >= 2
    // and total degree k+2.
    bool in_omega_leq(int k) const;
    // True when all components share one total degree.
    bool pure_total_degree(int* deg = nullptr) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<Bidegree, Form> parts_;
};

MixedForm wedge(const MixedForm& a, const MixedForm& b);

// Smooth (1,0) vector field: n coefficients of d/dz_i.
class VectorField10 {
public:
    VectorField10() = default;
    explicit VectorField10(int n) : n_(n), comp_(n, Scalar(n)) {}
    VectorField10(int n, std::vector<Scalar> comp) : n_(n), comp_(std::move(comp)) {
        if ((int)comp_.size() != n_) throw TypeError("vector field component count");
    }
    static VectorField10 basis(int n, int i) {
        VectorField10 v(n);
        v.comp_[i - 1] = Scalar::one(n);
        return v;
    }

    int dim() const { return n_; }
    const Scalar& component(int i) const { return comp_[i - 1]; }  // 1-based
    bool is_zero() const;

    VectorField10& operator+=(const VectorField10& o);
    VectorField10& operator-=(const VectorField10& o);
    friend VectorField10 operator+(VectorField10 a, const VectorField10& b) { return a += b; }
    friend VectorField10 operator-(VectorField10 a, const VectorField10& b) { return a -= b; }
    friend VectorField10 operator-(const VectorField10& a);
    friend bool operator==(const VectorField10& a, const VectorField10& b) {
        return a.n_ == b.n_ && a.comp_ == b.comp_;
    }
    friend bool operator!=(const VectorField10& a, const VectorField10& b) { return !(a == b); }

    VectorField10 scaled(const Scalar& s) const;

    // V(f) = sum_j V^j df/dz_j. (1,0) fields only see z-derivatives.
    Scalar apply(const Scalar& f) const;

    std::string str() const;

private:
    int n_ = 0;
    std::vector<Scalar> comp_;
};

// Lie bracket of (1,0) fields; stays of type (1,0).
VectorField10 vf_bracket(const VectorField10& v, const VectorField10& w);

// Exterior differentials. d = del + delbar, exact type split.
MixedForm ext_d(const Form& a);
MixedForm ext_d(const MixedForm& a);
Form del(const Form& a);
MixedForm del(const MixedForm& a);
Form delbar(const Form& a);
MixedForm delbar(const MixedForm& a);

// Interior product with a (1,0) field; pairs only with dz indices.
Form contract(const VectorField10& v, const Form& a);
MixedForm contract(const VectorField10& v, const MixedForm& a);

// Interior product pairing dzb indices with the given coefficients
// (components of a (0,1) field); hops over the dz block with sign (-1)^p.
Form contract_bar(const std::vector<Scalar>& w, const Form& a);

// Cartan formula L_V = i_V d + d i_V.
MixedForm lie_derivative(const VectorField10& v, const Form& a);
MixedForm lie_derivative(const VectorField10& v, const MixedForm& a);

// Poincare homotopies on polynomial forms (Euler vector field rescaling).
// del_primitive(w) returns X with del(X) == w for del-closed w; requires every
// component to have p >= 1 or positive z-degree. delbar_primitive likewise.
MixedForm del_primitive(const MixedForm& w);
MixedForm delbar_primitive(const MixedForm& w);

}  // namespace salab
