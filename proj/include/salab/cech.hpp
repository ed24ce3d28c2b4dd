#pragma once

#include <array>

#include "salab/morphisms.hpp"

namespace salab {

// Combinatorial cover: all charts share one coordinate algebra, only the
// nerve matters. Pairs are stored (i,j) with i < j, triples (i,j,k) ordered.
struct Cover {
    int m = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::array<int, 3>> triples;

    Cover(int count, std::vector<std::pair<int, int>> ps, std::vector<std::array<int, 3>> ts);
    bool has_pair(int i, int j) const;
};

// 1-cochain of S: (g_ij, B_ij) per nonempty ordered pair, with the group
// inverse convention g_ji = g_ij^{-1}, B_ji = -B_ij.
class Cochain1 {
public:
    Cochain1() = default;
    void set(int i, int j, AutElement e);  // i < j
    AutElement at(int i, int j) const;     // either orientation
    bool has(int i, int j) const;

private:
    std::map<std::pair<int, int>, AutElement> entries_;
};

// 0-cochain: (h_i, B_i) per chart.
class Cochain0 {
public:
    void set(int i, AutElement e);
    const AutElement& at(int i) const;
    bool has(int i) const { return entries_.count(i) != 0; }

private:
    std::map<int, AutElement> entries_;
};

struct ConnectionFamily {
    std::map<int, Connection> theta;
};

struct TripleResidual {
    SMatrix g;  // g_ij g_jk - g_ik
    Form B;     // B-part of the product minus B_ik (= d_ijk when g closes)
    bool is_zero() const;
};

// Per nonempty triple: s_product((g_ij,B_ij),(g_jk,B_jk)) - (g_ik,B_ik).
std::map<std::array<int, 3>, TripleResidual> cocycle_residual(const Cochain1& c, const Cover& cov);

// (h_i,B_i)(g_ij,B_ij)(h_j,B_j)^{-1} per pair.
Cochain1 coboundary_act(const Cochain0& h, const Cochain1& c, const Cover& cov);

struct CechAssembly {
    std::map<int, MixedForm> H;                                // per chart
    std::map<std::pair<int, int>, Form> gluing_residual;       // B_ij - c(a_i ^ a_ji) - (C_j - C_i)
    std::map<std::pair<int, int>, MixedForm> globality;        // H_i - H_j
    std::map<int, MixedForm> integrability;                    // dH_i + c(F_i ^ F_i)
    bool all_zero() const;
};

// Verifies the classification data flow: given a cocycle, a compatible
// connection family and user-supplied potentials C_i, computes the glued
// H_i = dC_i - CS(theta_i) + CS(theta0) + dc(theta_i ^ theta0) and reports
// every residual. Throws IncompatibleFamily when g_ij theta_j != theta_i.
CechAssembly assemble_H(const Cochain1& c, const ConnectionFamily& fam,
                        const std::map<int, Form>& C, const Cover& cov,
                        const Connection* theta0 = nullptr);

// c(F ^ F) split by type; requires F^{0,2} = 0.
MixedForm pontryagin_rep(const Connection& theta);

// cs_difference(theta, theta' - theta); d of it equals the Pontryagin
// difference of the two connections.
MixedForm connection_change_potential(const Connection& theta, const Connection& theta_prime);

}  // namespace salab
