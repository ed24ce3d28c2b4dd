#include "salab/lie.hpp"

#include <sstream>

#include "salab/textio.hpp"

namespace salab {

LieAlgebraSpec::LieAlgebraSpec(int k, std::vector<Block> blocks) : k_(k), blocks_(std::move(blocks)) {
    if (k <= 0) throw TypeError("matrix size must be positive");
    block_of_.assign(k, -1);
    bool nonzero = false;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const Block& blk = blocks_[b];
        if (blk.lo < 1 || blk.hi > k || blk.lo > blk.hi) throw TypeError("bad pairing block range");
        for (int i = blk.lo; i <= blk.hi; ++i) {
            if (block_of_[i - 1] != -1) throw TypeError("pairing blocks overlap");
            block_of_[i - 1] = (int)b;
        }
        if (!blk.mu.is_zero()) nonzero = true;
    }
    for (int i = 0; i < k; ++i)
        if (block_of_[i] == -1) throw TypeError("pairing blocks must partition 1..k");
    if (!nonzero) throw TypeError("pairing weights are all zero");
}

bool operator==(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
    if (a.k_ != b.k_ || a.blocks_.size() != b.blocks_.size()) return false;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
        if (a.blocks_[i].lo != b.blocks_[i].lo || a.blocks_[i].hi != b.blocks_[i].hi ||
            a.blocks_[i].mu != b.blocks_[i].mu)
            return false;
    }
    return true;
}

LieForm LieForm::from_scalars(int n, const LieAlgebraSpec& spec, const SMatrix& m) {
    std::vector<Form> entries;
    entries.reserve(m.size());
    for (const Scalar& s : m) entries.push_back(Form::scalar(s));
    return from_matrix(n, spec, 0, 0, std::move(entries));
}

LieForm LieForm::from_matrix(int n, const LieAlgebraSpec& spec, int p, int q,
                             std::vector<Form> entries) {
    LieForm out(n, spec);
    out.add_part(p, q, entries);
    return out;
}

void LieForm::add_part(int p, int q, const std::vector<Form>& entries) {
    int k = spec_.k();
    if ((int)entries.size() != k * k) throw TypeError("lie form entry count");
    bool any = false;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            const Form& f = entries[(i - 1) * k + (j - 1)];
            if (f.is_zero()) continue;
            if (f.dim() != n_ || f.p() != p || f.q() != q)
                throw TypeError("lie form entry bidegree/chart mismatch");
            if (!spec_.same_block(i, j))
                throw TypeError("lie form entry outside the pairing blocks");
            any = true;
        }
    }
    if (!any) return;
    auto it = parts_.find({p, q});
    if (it == parts_.end()) {
        parts_.emplace(Bidegree{p, q}, entries);
        // normalize stored zero forms to carry the right bidegree
        auto& stored = parts_[{p, q}];
        for (auto& f : stored)
            if (f.is_zero()) f = Form(n_, p, q);
        return;
    }
    bool all_zero = true;
    for (int e = 0; e < k * k; ++e) {
        it->second[e] += entries[e].is_zero() ? Form(n_, p, q) : entries[e];
        if (!it->second[e].is_zero()) all_zero = false;
    }
    if (all_zero) parts_.erase(it);
}

Form LieForm::entry(int p, int q, int i, int j) const {
    auto it = parts_.find({p, q});
    if (it == parts_.end()) return Form(n_, p, q);
    return it->second[(i - 1) * spec_.k() + (j - 1)];
}

std::vector<Form> LieForm::matrix_at(int p, int q) const {
    auto it = parts_.find({p, q});
    if (it != parts_.end()) return it->second;
    return std::vector<Form>(spec_.k() * spec_.k(), Form(n_, p, q));
}

MixedForm LieForm::entry_mixed(int i, int j) const {
    MixedForm out(n_);
    for (const auto& [d, m] : parts_) out.add(m[(i - 1) * spec_.k() + (j - 1)]);
    return out;
}

bool LieForm::pure(int p, int q) const {
    for (const auto& [d, m] : parts_)
        if (d != Bidegree{p, q}) return false;
    return true;
}

bool LieForm::pure_total_degree(int* deg) const {
    int found = -1;
    for (const auto& [d, m] : parts_) {
        int t = d.first + d.second;
        if (found == -1) found = t;
        if (t != found) return false;
    }
    if (deg) *deg = (found == -1 ? 0 : found);
    return true;
}

void LieForm::check(const LieForm& o) const {
    if (n_ != o.n_) throw TypeError("lie form chart mismatch");
    if (!(spec_ == o.spec_)) throw TypeError("lie algebra spec mismatch");
}

LieForm& LieForm::operator+=(const LieForm& o) {
    check(o);
    for (const auto& [d, m] : o.parts_) add_part(d.first, d.second, m);
    return *this;
}

LieForm& LieForm::operator-=(const LieForm& o) { return *this += -o; }

LieForm operator-(const LieForm& a) {
    LieForm out(a.n_, a.spec_);
    for (const auto& [d, m] : a.parts_) {
        std::vector<Form> neg;
        neg.reserve(m.size());
        for (const Form& f : m) neg.push_back(-f);
        out.parts_.emplace(d, std::move(neg));
    }
    return out;
}

bool operator==(const LieForm& a, const LieForm& b) {
    return a.n_ == b.n_ && a.spec_ == b.spec_ && a.parts_ == b.parts_;
}

LieForm LieForm::scaled(const CRat& c) const {
    LieForm out(n_, spec_);
    if (c.is_zero()) return out;
    for (const auto& [d, m] : parts_) {
        std::vector<Form> v;
        v.reserve(m.size());
        for (const Form& f : m) v.push_back(f.scaled(c));
        out.add_part(d.first, d.second, v);
    }
    return out;
}

LieForm LieForm::scaled(const Scalar& s) const {
    LieForm out(n_, spec_);
    if (s.is_zero()) return out;
    for (const auto& [d, m] : parts_) {
        std::vector<Form> v;
        v.reserve(m.size());
        for (const Form& f : m) v.push_back(f.scaled(s));
        out.add_part(d.first, d.second, v);
    }
    return out;
}

std::string LieForm::str() const {
    std::ostringstream os;
    int k = spec_.k();
    os << "[";
    for (int i = 1; i <= k; ++i) {
        if (i > 1) os << "; ";
        for (int j = 1; j <= k; ++j) {
            if (j > 1) os << ", ";
            os << entry_mixed(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

namespace {

std::vector<Form> wedge_matrices(int n, int k, int p, int q, const std::vector<Form>& a,
                                 const std::vector<Form>& b) {
    std::vector<Form> out(k * k, Form(n, p, q));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            const Form& ail = a[i * k + l];
            if (ail.is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                const Form& blj = b[l * k + j];
                if (blj.is_zero()) continue;
                out[i * k + j] += wedge(ail, blj);
            }
        }
    return out;
}

}  // namespace

LieForm mat_wedge(const LieForm& a, const LieForm& b) {
    if (!(a.spec() == b.spec()) || a.dim() != b.dim())
        throw TypeError("lie form product: spec/chart mismatch");
    int k = a.spec().k();
    LieForm out(a.dim(), a.spec());
    for (const auto& [da, ma] : a.parts())
        for (const auto& [db, mb] : b.parts()) {
            int p = da.first + db.first, q = da.second + db.second;
            out.add_part(p, q, wedge_matrices(a.dim(), k, p, q, ma, mb));
        }
    return out;
}

LieForm graded_bracket(const LieForm& a, const LieForm& b) {
    if (!(a.spec() == b.spec()) || a.dim() != b.dim())
        throw TypeError("graded bracket: spec/chart mismatch");
    int k = a.spec().k();
    LieForm out(a.dim(), a.spec());
    for (const auto& [da, ma] : a.parts())
        for (const auto& [db, mb] : b.parts()) {
            int p = da.first + db.first, q = da.second + db.second;
            std::vector<Form> ab = wedge_matrices(a.dim(), k, p, q, ma, mb);
            std::vector<Form> ba = wedge_matrices(a.dim(), k, p, q, mb, ma);
            int sign = ((da.first + da.second) * (db.first + db.second)) % 2 ? -1 : 1;
            for (int e = 0; e < k * k; ++e) {
                if (sign == 1)
                    ab[e] -= ba[e];
                else
                    ab[e] += ba[e];
            }
            out.add_part(p, q, ab);
        }
    return out;
}

MixedForm pairing_c(const LieForm& a, const LieForm& b) {
    if (!(a.spec() == b.spec()) || a.dim() != b.dim())
        throw TypeError("pairing: spec/chart mismatch");
    int k = a.spec().k();
    MixedForm out(a.dim());
    for (const auto& [da, ma] : a.parts())
        for (const auto& [db, mb] : b.parts()) {
            Form acc(a.dim(), da.first + db.first, da.second + db.second);
            for (int i = 1; i <= k; ++i) {
                const CRat& mu = a.spec().mu_of(i);
                if (mu.is_zero()) continue;
                for (int l = 1; l <= k; ++l) {
                    const Form& ail = ma[(i - 1) * k + (l - 1)];
                    const Form& bli = mb[(l - 1) * k + (i - 1)];
                    if (ail.is_zero() || bli.is_zero()) continue;
                    acc += wedge(ail, bli).scaled(mu);
                }
            }
            out.add(acc);
        }
    return out;
}

namespace {

LieForm entrywise(const LieForm& a, int dp, int dq, Form (*op)(const Form&)) {
    LieForm out(a.dim(), a.spec());
    for (const auto& [d, m] : a.parts()) {
        std::vector<Form> v;
        v.reserve(m.size());
        for (const Form& f : m) v.push_back(op(f));
        out.add_part(d.first + dp, d.second + dq, v);
    }
    return out;
}

}  // namespace

LieForm lie_del(const LieForm& a) {
    return entrywise(a, 1, 0, +[](const Form& f) { return del(f); });
}

LieForm lie_delbar(const LieForm& a) {
    return entrywise(a, 0, 1, +[](const Form& f) { return delbar(f); });
}

LieForm lie_d(const LieForm& a) { return lie_del(a) + lie_delbar(a); }

LieForm contract(const VectorField10& v, const LieForm& a) {
    LieForm out(a.dim(), a.spec());
    for (const auto& [d, m] : a.parts()) {
        if (d.first < 1) continue;
        std::vector<Form> w;
        w.reserve(m.size());
        for (const Form& f : m) w.push_back(contract(v, f));
        out.add_part(d.first - 1, d.second, w);
    }
    return out;
}

GaugeMap::GaugeMap(int n, LieAlgebraSpec spec, SMatrix g, SMatrix g_inv)
    : n_(n), spec_(std::move(spec)), g_(std::move(g)), ginv_(std::move(g_inv)) {
    int k = spec_.k();
    if ((int)g_.size() != k * k || (int)ginv_.size() != k * k)
        throw TypeError("gauge map entry count");
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const Scalar& s = g_[(i - 1) * k + (j - 1)];
            const Scalar& si = ginv_[(i - 1) * k + (j - 1)];
            if ((!s.is_zero() || !si.is_zero()) && !spec_.same_block(i, j))
                throw TypeError("gauge map entry outside the pairing blocks");
        }
    SMatrix prod = smat_mul(spec_, g_, ginv_);
    SMatrix prod2 = smat_mul(spec_, ginv_, g_);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Scalar want = (i == j) ? Scalar::one(n_) : Scalar(n_);
            if (prod[i * k + j] != want || prod2[i * k + j] != want)
                throw TypeError("gauge map inverse is not exact");
        }
    holomorphic_ = true;
    for (const Scalar& s : g_)
        for (int i = 1; i <= n_ && holomorphic_; ++i)
            if (!s.dzb(i).is_zero()) holomorphic_ = false;
}

GaugeMap GaugeMap::identity(int n, const LieAlgebraSpec& spec) {
    int k = spec.k();
    SMatrix id(k * k, Scalar(n));
    for (int i = 0; i < k; ++i) id[i * k + i] = Scalar::one(n);
    return GaugeMap(n, spec, id, id);
}

GaugeMap operator*(const GaugeMap& a, const GaugeMap& b) {
    if (!(a.spec_ == b.spec_) || a.n_ != b.n_) throw TypeError("gauge map spec/chart mismatch");
    return GaugeMap(a.n_, a.spec_, smat_mul(a.spec_, a.g_, b.g_),
                    smat_mul(a.spec_, b.ginv_, a.ginv_));
}

LieForm GaugeMap::ad(const LieForm& a) const { return smat_lmul(g_, smat_rmul(a, ginv_)); }

LieForm GaugeMap::dg() const {
    int k = spec_.k();
    std::vector<Form> p10, p01;
    p10.reserve(k * k);
    p01.reserve(k * k);
    for (const Scalar& s : g_) {
        MixedForm d = ext_d(Form::scalar(s));
        p10.push_back(d.component(1, 0));
        p01.push_back(d.component(0, 1));
    }
    LieForm out(n_, spec_);
    out.add_part(1, 0, p10);
    out.add_part(0, 1, p01);
    return out;
}

std::string GaugeMap::str() const {
    std::ostringstream os;
    int k = spec_.k();
    os << "[";
    for (int i = 0; i < k; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < k; ++j) {
            if (j) os << ", ";
            os << g_[i * k + j].str();
        }
    }
    os << "]";
    return os.str();
}

SMatrix smat_mul(const LieAlgebraSpec& spec, const SMatrix& a, const SMatrix& b) {
    int k = spec.k();
    if ((int)a.size() != k * k || (int)b.size() != k * k) throw TypeError("matrix size mismatch");
    int n = 0;
    for (const Scalar& s : a)
        if (s.dim()) n = s.dim();
    for (const Scalar& s : b)
        if (s.dim()) n = s.dim();
    SMatrix out(k * k, Scalar(n));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i * k + l].is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                if (b[l * k + j].is_zero()) continue;
                out[i * k + j] += a[i * k + l] * b[l * k + j];
            }
        }
    return out;
}

LieForm smat_lmul(const SMatrix& m, const LieForm& a) {
    int k = a.spec().k();
    LieForm out(a.dim(), a.spec());
    for (const auto& [d, mat] : a.parts()) {
        std::vector<Form> v(k * k, Form(a.dim(), d.first, d.second));
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                if (m[i * k + l].is_zero()) continue;
                for (int j = 0; j < k; ++j) {
                    if (mat[l * k + j].is_zero()) continue;
                    v[i * k + j] += mat[l * k + j].scaled(m[i * k + l]);
                }
            }
        out.add_part(d.first, d.second, v);
    }
    return out;
}

LieForm smat_rmul(const LieForm& a, const SMatrix& m) {
    int k = a.spec().k();
    LieForm out(a.dim(), a.spec());
    for (const auto& [d, mat] : a.parts()) {
        std::vector<Form> v(k * k, Form(a.dim(), d.first, d.second));
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                if (mat[i * k + l].is_zero()) continue;
                for (int j = 0; j < k; ++j) {
                    if (m[l * k + j].is_zero()) continue;
                    v[i * k + j] += mat[i * k + l].scaled(m[l * k + j]);
                }
            }
        out.add_part(d.first, d.second, v);
    }
    return out;
}

Connection::Connection(LieForm t10, LieForm t01) : theta10_(std::move(t10)), theta01_(std::move(t01)) {
    if (!theta10_.pure(1, 0)) throw TypeError("theta10 must be of type (1,0)");
    if (!theta01_.pure(0, 1)) throw TypeError("theta01 must be of type (0,1)");
    if (theta10_.dim() != theta01_.dim() || !(theta10_.spec() == theta01_.spec()))
        throw TypeError("connection legs disagree");
}

Connection operator+(const Connection& t, const LieForm& a) {
    LieForm t10 = t.theta10_;
    LieForm t01 = t.theta01_;
    for (const auto& [d, m] : a.parts()) {
        if (d == Bidegree{1, 0})
            t10.add_part(1, 0, m);
        else if (d == Bidegree{0, 1})
            t01.add_part(0, 1, m);
        else
            throw TypeError("connection shift must be a 1-form");
    }
    return Connection(std::move(t10), std::move(t01));
}

Connection operator-(const Connection& a, const Connection& b) {
    Connection out = a;
    out.theta10_ -= b.theta10_;
    out.theta01_ -= b.theta01_;
    return out;
}

std::string Connection::str() const {
    return "{theta10: " + theta10_.str() + ", theta01: " + theta01_.str() + "}";
}

LieForm curvature(const Connection& theta) {
    LieForm full = theta.full();
    LieForm f = lie_d(full);
    f += graded_bracket(full, full).scaled(CRat(Rat(1, 2)));
    return f;
}

bool integrable(const Connection& theta) {
    return curvature(theta).parts().count({0, 2}) == 0;
}

LieForm cov_d(const Connection& theta, const LieForm& a) {
    return lie_d(a) + graded_bracket(theta.full(), a);
}

LieForm del_theta(const Connection& theta, const LieForm& a) {
    return lie_del(a) + graded_bracket(theta.theta10(), a);
}

LieForm delbar_theta(const Connection& theta, const LieForm& a) {
    return lie_delbar(a) + graded_bracket(theta.theta01(), a);
}

MixedForm chern_simons(const Connection& theta) {
    LieForm full = theta.full();
    LieForm bracket = graded_bracket(full, full);
    MixedForm cs = pairing_c(full, bracket).scaled(CRat(Rat(-1, 6)));
    cs += pairing_c(curvature(theta), full);
    return cs;
}

MixedForm cs_difference(const Connection& theta, const LieForm& a) {
    if (!a.pure_total_degree() || a.parts().size() > 2)
        throw TypeError("cs_difference needs a 1-form");
    for (const auto& [d, m] : a.parts())
        if (d.first + d.second != 1) throw TypeError("cs_difference needs a 1-form");
    MixedForm out = pairing_c(a, curvature(theta)).scaled(CRat(2));
    out += pairing_c(a, cov_d(theta, a));
    out += pairing_c(a, graded_bracket(a, a)).scaled(CRat(Rat(1, 3)));
    return out;
}

LieForm mc_form(const GaugeMap& g) { return smat_lmul(g.g_inv(), g.dg()); }

Connection gauge_transform(const GaugeMap& g, const Connection& theta) {
    if (!(g.spec() == theta.spec()) || g.dim() != theta.dim())
        throw TypeError("gauge transform: spec/chart mismatch");
    LieForm t = g.ad(theta.full());
    t -= smat_rmul(g.dg(), g.g_inv());
    LieForm t10(theta.dim(), theta.spec()), t01(theta.dim(), theta.spec());
    for (const auto& [d, m] : t.parts()) {
        if (d == Bidegree{1, 0})
            t10.add_part(1, 0, m);
        else if (d == Bidegree{0, 1})
            t01.add_part(0, 1, m);
        else
            throw TypeError("gauge transform produced a non 1-form part");
    }
    return Connection(std::move(t10), std::move(t01));
}

LieForm a_of(const GaugeMap& g, const Connection& theta) {
    return gauge_transform(g.inverse(), theta).full() - theta.full();
}

MixedForm sigma_rep(const GaugeMap& g, const Connection& theta) {
    Connection moved = gauge_transform(g, theta);
    MixedForm out = chern_simons(moved);
    out -= chern_simons(theta);
    out -= ext_d(pairing_c(moved.full(), theta.full()));
    return out;
}

}  // namespace salab
