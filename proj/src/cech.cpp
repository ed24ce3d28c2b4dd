#include "salab/cech.hpp"

#include <algorithm>

namespace salab {

Cover::Cover(int count, std::vector<std::pair<int, int>> ps, std::vector<std::array<int, 3>> ts)
    : m(count), pairs(std::move(ps)), triples(std::move(ts)) {
    if (m <= 0) throw TypeError("cover needs at least one chart");
    for (auto& [i, j] : pairs) {
        if (i >= j || i < 1 || j > m) throw TypeError("cover pair must satisfy 1 <= i < j <= m");
    }
    for (auto& t : triples) {
        if (!(t[0] < t[1] && t[1] < t[2]) || t[0] < 1 || t[2] > m)
            throw TypeError("cover triple must be strictly increasing in 1..m");
        if (!has_pair(t[0], t[1]) || !has_pair(t[1], t[2]) || !has_pair(t[0], t[2]))
            throw TypeError("cover triple lists a pair not marked nonempty");
    }
}

bool Cover::has_pair(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) != pairs.end();
}

void Cochain1::set(int i, int j, AutElement e) {
    if (i >= j) throw TypeError("cochain entries are keyed by i < j");
    entries_.insert_or_assign({i, j}, std::move(e));
}

bool Cochain1::has(int i, int j) const {
    if (i > j) std::swap(i, j);
    return entries_.count({i, j}) != 0;
}

AutElement Cochain1::at(int i, int j) const {
    if (i < j) {
        auto it = entries_.find({i, j});
        if (it == entries_.end()) throw TypeError("cochain entry missing");
        return it->second;
    }
    auto it = entries_.find({j, i});
    if (it == entries_.end()) throw TypeError("cochain entry missing");
    return s_inverse(it->second);
}

void Cochain0::set(int i, AutElement e) { entries_.insert_or_assign(i, std::move(e)); }

const AutElement& Cochain0::at(int i) const {
    auto it = entries_.find(i);
    if (it == entries_.end()) throw TypeError("0-cochain entry missing");
    return it->second;
}

bool TripleResidual::is_zero() const {
    for (const Scalar& s : g)
        if (!s.is_zero()) return false;
    return B.is_zero();
}

std::map<std::array<int, 3>, TripleResidual> cocycle_residual(const Cochain1& c, const Cover& cov) {
    std::map<std::array<int, 3>, TripleResidual> out;
    for (const auto& t : cov.triples) {
        AutElement prod = s_product(c.at(t[0], t[1]), c.at(t[1], t[2]));
        AutElement ik = c.at(t[0], t[2]);
        TripleResidual res{prod.g.g(), prod.B - ik.B};
        int kk = prod.g.spec().k();
        for (int e = 0; e < kk * kk; ++e) res.g[e] -= ik.g.g()[e];
        out.emplace(t, std::move(res));
    }
    return out;
}

Cochain1 coboundary_act(const Cochain0& h, const Cochain1& c, const Cover& cov) {
    Cochain1 out;
    for (const auto& [i, j] : cov.pairs) {
        AutElement e = s_product(s_product(h.at(i), c.at(i, j)), s_inverse(h.at(j)));
        out.set(i, j, std::move(e));
    }
    return out;
}

CechAssembly assemble_H(const Cochain1& c, const ConnectionFamily& fam,
                        const std::map<int, Form>& C, const Cover& cov,
                        const Connection* theta0_in) {
    CechAssembly out;
    if (fam.theta.empty()) throw TypeError("assemble_H needs a connection family");
    const Connection& first = fam.theta.begin()->second;
    Connection theta0 =
        theta0_in ? *theta0_in : Connection::zero(first.dim(), first.spec());

    for (const auto& [i, j] : cov.pairs) {
        auto ti = fam.theta.find(i), tj = fam.theta.find(j);
        if (ti == fam.theta.end() || tj == fam.theta.end())
            throw TypeError("connection family missing a chart");
        LieForm res = gauge_transform(c.at(i, j).g, tj->second).full() - ti->second.full();
        if (!res.is_zero())
            throw IncompatibleFamily("g_ij theta_j != theta_i on pair (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
    }

    // gluing residual B_ij - c(a_i ^ a_ji) - (C_j - C_i)
    for (const auto& [i, j] : cov.pairs) {
        auto Ci = C.find(i), Cj = C.find(j);
        if (Ci == C.end() || Cj == C.end()) throw TypeError("potential C_i missing");
        LieForm ai = fam.theta.at(i).full() - theta0.full();
        LieForm aji = a_of(c.at(j, i).g, theta0);
        Form res = c.at(i, j).B;
        res -= pairing_c(ai, aji).component(2, 0);
        res -= Cj->second;
        res += Ci->second;
        out.gluing_residual.emplace(std::make_pair(i, j), std::move(res));
    }

    for (const auto& [i, th] : fam.theta) {
        auto Ci = C.find(i);
        if (Ci == C.end()) throw TypeError("potential C_i missing");
        MixedForm Hi = ext_d(Ci->second);
        Hi -= chern_simons(th);
        Hi += chern_simons(theta0);
        Hi += ext_d(pairing_c(th.full(), theta0.full()));
        out.H.emplace(i, std::move(Hi));
    }

    for (const auto& [i, j] : cov.pairs) {
        MixedForm diff = out.H.at(i);
        diff -= out.H.at(j);
        out.globality.emplace(std::make_pair(i, j), std::move(diff));
    }

    for (const auto& [i, th] : fam.theta) {
        MixedForm res = ext_d(out.H.at(i));
        LieForm F = curvature(th);
        res += pairing_c(F, F);
        out.integrability.emplace(i, std::move(res));
    }
    return out;
}

bool CechAssembly::all_zero() const {
    for (const auto& [k, v] : gluing_residual)
        if (!v.is_zero()) return false;
    for (const auto& [k, v] : globality)
        if (!v.is_zero()) return false;
    for (const auto& [k, v] : integrability)
        if (!v.is_zero()) return false;
    return true;
}

MixedForm pontryagin_rep(const Connection& theta) {
    LieForm F = curvature(theta);
    if (F.parts().count({0, 2}))
        throw NonIntegrableConnection("pontryagin_rep requires F^{0,2} = 0");
    return pairing_c(F, F);
}

MixedForm connection_change_potential(const Connection& theta, const Connection& theta_prime) {
    LieForm a = theta_prime.full() - theta.full();
    if (a.is_zero()) return MixedForm(theta.dim());
    return cs_difference(theta, a);
}

}  // namespace salab
