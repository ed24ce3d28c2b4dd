#pragma once

#include <gmpxx.h>

#include <string>

namespace salab {

using Rat = mpq_class;

// Exact Gaussian rational: re + im*i with exact rational parts. This is the
// coefficient field of every polynomial in the library; no floating point
// exists anywhere downstream of it.
struct CRat {
    Rat re{0};
    Rat im{0};

    CRat() = default;
    CRat(long r) : re(r) {}
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    CRat& operator+=(const CRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRat& operator-=(const CRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    // Division by a nonzero rational (used by the Poincare homotopies).
    CRat div_rat(const Rat& d) const { return CRat(re / d, im / d); }
};

// Canonical text for one rational: "p" or "p/q" with q > 0 and gcd(p,q)=1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Canonical text for a complex rational, e.g. "3/2+1/3i", "-2", "1i".
inline std::string crat_str(const CRat& c) {
    if (c.im == 0) return rat_str(c.re);
    std::string imt = rat_str(c.im) + "i";
    if (c.re == 0) return imt;
    if (c.im > 0) return rat_str(c.re) + "+" + imt;
    return rat_str(c.re) + imt;  // im < 0 carries its own sign
}

}  // namespace salab
