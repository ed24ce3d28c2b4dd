#pragma once

#include <map>
#include <vector>

#include "salab/errors.hpp"
#include "salab/rational.hpp"

namespace salab {

// Exponent vector of a monomial in z_1..z_n, zb_1..zb_n and the nilpotent
// deformation parameter eps (eps^2 = 0). Layout: [z | zb | eps], size 2n+1.
using Mono = std::vector<int>;

// Exact polynomial with Gaussian-rational coefficients on a chart of C^n.
// Invariant: no stored monomial has coefficient zero, so equality is map
// equality and is_zero() is emptiness.
class Scalar {
public:
    Scalar() = default;  // zero on a 0-dimensional chart; combines with nothing
    explicit Scalar(int n) : n_(n) {}

    static Scalar constant(int n, CRat c);
    static Scalar one(int n) { return constant(n, CRat(1)); }
    static Scalar coord(int n, int i);      // z_i, 1-based
    static Scalar coord_bar(int n, int i);  // zb_i
    static Scalar eps(int n);               // nilpotent generator

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, CRat>& terms() const { return terms_; }

    void add_term(const Mono& m, const CRat& c);

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar scaled(const CRat& c) const;

    // Formal partial derivatives; i is 1-based. eps is a constant for both.
    Scalar dz(int i) const;
    Scalar dzb(int i) const;

    bool depends_on_zbar() const;

    // Total degree in the z variables only / zb variables only.
    int z_degree(const Mono& m) const;
    int zb_degree(const Mono& m) const;

    // Splits into z-homogeneous (resp. zb-homogeneous) graded pieces, keyed
    // by degree. Used by the Poincare homotopies.
    std::map<int, Scalar> z_graded() const;
    std::map<int, Scalar> zb_graded() const;

    // Coefficient of eps^1 as a polynomial without eps (exact first-order
    // part), and the eps-free part.
    Scalar eps_part() const;
    Scalar const_part() const;

    std::string str() const;  // canonical text, see textio.cpp

private:
    void check_dim(const Scalar& o) const {
        if (n_ != o.n_) throw TypeError("scalar chart dimension mismatch");
    }

    int n_ = 0;
    std::map<Mono, CRat> terms_;
};

inline Scalar operator*(const CRat& c, const Scalar& s) { return s.scaled(c); }

}  // namespace salab
