#include "salab/scalar.hpp"

namespace salab {

Scalar Scalar::constant(int n, CRat c) {
    Scalar s(n);
    if (!c.is_zero()) s.terms_[Mono(2 * n + 1, 0)] = std::move(c);
    return s;
}

Scalar Scalar::coord(int n, int i) {
    if (i < 1 || i > n) throw TypeError("coordinate index out of range");
    Scalar s(n);
    Mono m(2 * n + 1, 0);
    m[i - 1] = 1;
    s.terms_[m] = CRat(1);
    return s;
}

Scalar Scalar::coord_bar(int n, int i) {
    if (i < 1 || i > n) throw TypeError("coordinate index out of range");
    Scalar s(n);
    Mono m(2 * n + 1, 0);
    m[n + i - 1] = 1;
    s.terms_[m] = CRat(1);
    return s;
}

Scalar Scalar::eps(int n) {
    Scalar s(n);
    Mono m(2 * n + 1, 0);
    m[2 * n] = 1;
    s.terms_[m] = CRat(1);
    return s;
}

void Scalar::add_term(const Mono& m, const CRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_dim(b);
    Scalar out(a.n_);
    const int w = 2 * a.n_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma[w] + mb[w] > 1) continue;  // eps^2 = 0
            Mono m(ma);
            for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Scalar operator-(const Scalar& a) {
    Scalar out(a.n_);
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
}

Scalar Scalar::scaled(const CRat& c) const {
    Scalar out(n_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

Scalar Scalar::dz(int i) const {
    Scalar out(n_);
    for (const auto& [m, c] : terms_) {
        int e = m[i - 1];
        if (e == 0) continue;
        Mono d(m);
        d[i - 1] -= 1;
        out.add_term(d, c * CRat(e));
    }
    return out;
}

Scalar Scalar::dzb(int i) const {
    Scalar out(n_);
    for (const auto& [m, c] : terms_) {
        int e = m[n_ + i - 1];
        if (e == 0) continue;
        Mono d(m);
        d[n_ + i - 1] -= 1;
        out.add_term(d, c * CRat(e));
    }
    return out;
}

bool Scalar::depends_on_zbar() const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < n_; ++i)
            if (m[n_ + i] != 0) return true;
    return false;
}

int Scalar::z_degree(const Mono& m) const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += m[i];
    return d;
}

int Scalar::zb_degree(const Mono& m) const {
    int d = 0;
    for (int i = 0; i < n_; ++i) d += m[n_ + i];
    return d;
}

std::map<int, Scalar> Scalar::z_graded() const {
    std::map<int, Scalar> out;
    for (const auto& [m, c] : terms_) {
        auto [it, ins] = out.try_emplace(z_degree(m), Scalar(n_));
        it->second.add_term(m, c);
    }
    return out;
}

std::map<int, Scalar> Scalar::zb_graded() const {
    std::map<int, Scalar> out;
    for (const auto& [m, c] : terms_) {
        auto [it, ins] = out.try_emplace(zb_degree(m), Scalar(n_));
        it->second.add_term(m, c);
    }
    return out;
}

Scalar Scalar::eps_part() const {
    Scalar out(n_);
    for (const auto& [m, c] : terms_) {
        if (m[2 * n_] != 1) continue;
        Mono d(m);
        d[2 * n_] = 0;
        out.add_term(d, c);
    }
    return out;
}

Scalar Scalar::const_part() const {
    Scalar out(n_);
    for (const auto& [m, c] : terms_)
        if (m[2 * n_] == 0) out.add_term(m, c);
    return out;
}

}  // namespace salab
