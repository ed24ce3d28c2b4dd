#pragma once

#include <memory>
#include <vector>

#include "salab/form.hpp"

namespace salab {

// Weighted-block-trace pairing c = sum_j mu_j tr on gl(block_j). The matrix
// model of g is the block-diagonal subalgebra of gl_k; bi-invariance of c is
// exact there, which every identity downstream relies on.
class LieAlgebraSpec {
public:
    struct Block {
        int lo, hi;  // 1-based, inclusive
        CRat mu;
    };

    LieAlgebraSpec() = default;
    LieAlgebraSpec(int k, std::vector<Block> blocks);

    static LieAlgebraSpec gl(int k, CRat mu = CRat(1)) {
        return LieAlgebraSpec(k, {Block{1, k, std::move(mu)}});
    }

    int k() const { return k_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    bool same_block(int i, int j) const { return block_of_[i - 1] == block_of_[j - 1]; }
    const CRat& mu_of(int i) const { return blocks_[block_of_[i - 1]].mu; }

    friend bool operator==(const LieAlgebraSpec& a, const LieAlgebraSpec& b);
    friend bool operator!=(const LieAlgebraSpec& a, const LieAlgebraSpec& b) { return !(a == b); }

private:
    int k_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> block_of_;
};

using SMatrix = std::vector<Scalar>;  // k*k row-major

// Matrix-Lie-algebra-valued form, graded by bidegree. Entries outside the
// diagonal blocks of the spec must vanish.
class LieForm {
public:
    LieForm() = default;
    LieForm(int n, LieAlgebraSpec spec) : n_(n), spec_(std::move(spec)) {}

    static LieForm from_scalars(int n, const LieAlgebraSpec& spec, const SMatrix& m);
    // Single pure part from a matrix of Forms of one bidegree.
    static LieForm from_matrix(int n, const LieAlgebraSpec& spec, int p, int q,
                               std::vector<Form> entries);

    int dim() const { return n_; }
    const LieAlgebraSpec& spec() const { return spec_; }
    bool is_zero() const { return parts_.empty(); }
    const std::map<Bidegree, std::vector<Form>>& parts() const { return parts_; }

    void add_part(int p, int q, const std::vector<Form>& entries);
    Form entry(int p, int q, int i, int j) const;  // 1-based
    std::vector<Form> matrix_at(int p, int q) const;
    MixedForm entry_mixed(int i, int j) const;

    bool pure(int p, int q) const;  // zero or concentrated at (p,q)
    bool pure_total_degree(int* deg = nullptr) const;

    LieForm& operator+=(const LieForm& o);
    LieForm& operator-=(const LieForm& o);
    friend LieForm operator+(LieForm a, const LieForm& b) { return a += b; }
    friend LieForm operator-(LieForm a, const LieForm& b) { return a -= b; }
    friend LieForm operator-(const LieForm& a);
    friend bool operator==(const LieForm& a, const LieForm& b);
    friend bool operator!=(const LieForm& a, const LieForm& b) { return !(a == b); }

    LieForm scaled(const CRat& c) const;
    LieForm scaled(const Scalar& s) const;

    std::string str() const;

private:
    void check(const LieForm& o) const;

    int n_ = 0;
    LieAlgebraSpec spec_;
    std::map<Bidegree, std::vector<Form>> parts_;
};

// Matrix product with entrywise wedge, (A.B)_ij = sum_l A_il ^ B_lj.
LieForm mat_wedge(const LieForm& a, const LieForm& b);

// Graded bracket [a,b] = a^b - (-1)^{|a||b|} b^a, per pure-degree pair.
LieForm graded_bracket(const LieForm& a, const LieForm& b);

// c(a,b) = sum_j mu_j tr_{block_j}(a^b).
MixedForm pairing_c(const LieForm& a, const LieForm& b);

LieForm lie_d(const LieForm& a);
LieForm lie_del(const LieForm& a);
LieForm lie_delbar(const LieForm& a);
LieForm contract(const VectorField10& v, const LieForm& a);

// Holomorphic-or-not polynomial gauge map with an explicitly stored exact
// inverse. Block-diagonal like everything else.
class GaugeMap {
public:
    GaugeMap() = default;
    GaugeMap(int n, LieAlgebraSpec spec, SMatrix g, SMatrix g_inv);

    static GaugeMap identity(int n, const LieAlgebraSpec& spec);

    int dim() const { return n_; }
    const LieAlgebraSpec& spec() const { return spec_; }
    const SMatrix& g() const { return g_; }
    const SMatrix& g_inv() const { return ginv_; }
    bool holomorphic() const { return holomorphic_; }

    GaugeMap inverse() const { return GaugeMap(n_, spec_, ginv_, g_); }
    friend GaugeMap operator*(const GaugeMap& a, const GaugeMap& b);
    friend bool operator==(const GaugeMap& a, const GaugeMap& b) {
        return a.n_ == b.n_ && a.spec_ == b.spec_ && a.g_ == b.g_;
    }

    // Adjoint action g A g^{-1}.
    LieForm ad(const LieForm& a) const;
    // dg as a Lie-algebra-valued 1-form (not ad-equivariant by itself).
    LieForm dg() const;

    std::string str() const;

private:
    int n_ = 0;
    LieAlgebraSpec spec_;
    SMatrix g_, ginv_;
    bool holomorphic_ = false;
};

SMatrix smat_mul(const LieAlgebraSpec& spec, const SMatrix& a, const SMatrix& b);
LieForm smat_lmul(const SMatrix& m, const LieForm& a);  // m . a
LieForm smat_rmul(const LieForm& a, const SMatrix& m);  // a . m

// Connection theta = theta^{1,0} + theta^{0,1} on the trivialized bundle.
class Connection {
public:
    Connection() = default;
    Connection(LieForm t10, LieForm t01);
    static Connection zero(int n, const LieAlgebraSpec& spec) {
        return Connection(LieForm(n, spec), LieForm(n, spec));
    }

    int dim() const { return theta10_.dim(); }
    const LieAlgebraSpec& spec() const { return theta10_.spec(); }
    const LieForm& theta10() const { return theta10_; }
    const LieForm& theta01() const { return theta01_; }
    LieForm full() const { return theta10_ + theta01_; }

    friend bool operator==(const Connection& a, const Connection& b) {
        return a.theta10_ == b.theta10_ && a.theta01_ == b.theta01_;
    }
    friend bool operator!=(const Connection& a, const Connection& b) { return !(a == b); }
    friend Connection operator+(const Connection& t, const LieForm& a);
    friend Connection operator-(const Connection& a, const Connection& b);

    std::string str() const;

private:
    LieForm theta10_, theta01_;
};

// F = d theta + 1/2 [theta, theta]; parts (2,0), (1,1), (0,2).
LieForm curvature(const Connection& theta);
// F^{0,2} = 0 (condition for theta to induce a holomorphic structure).
bool integrable(const Connection& theta);

// d^theta a = da + [theta, a]; type projections use one leg of theta.
LieForm cov_d(const Connection& theta, const LieForm& a);
LieForm del_theta(const Connection& theta, const LieForm& a);
LieForm delbar_theta(const Connection& theta, const LieForm& a);

// CS(theta) = -1/6 c(theta,[theta,theta]) + c(F,theta); dCS = c(F^F).
MixedForm chern_simons(const Connection& theta);

// 2c(a^F) + c(a^d^theta a) + 1/3 c(a,[a,a]) for a 1-form a.
MixedForm cs_difference(const Connection& theta, const LieForm& a);

// Maurer-Cartan form g^{-1} dg (holomorphic g: pure (1,0)).
LieForm mc_form(const GaugeMap& g);

// Gauge action on connections: g.theta = g theta g^{-1} - dg g^{-1}.
Connection gauge_transform(const GaugeMap& g, const Connection& theta);

// a^g = g^{-1}.theta - theta = g^{-1} theta g + g^{-1} dg - theta.
LieForm a_of(const GaugeMap& g, const Connection& theta);

// CS(g theta) - CS(theta) - d c(g theta ^ theta): closed, in Omega^{<=1}
// for holomorphic g and integrable theta.
MixedForm sigma_rep(const GaugeMap& g, const Connection& theta);

}  // namespace salab
