#include "salab/form.hpp"

#include <algorithm>

namespace salab {

int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > idx[j]) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

Form Form::basis(int n, std::vector<int> I, std::vector<int> J) {
    Form f(n, (int)I.size(), (int)J.size());
    f.add_term(std::move(I), std::move(J), Scalar::one(n));
    return f;
}

void Form::add_term(std::vector<int> I, std::vector<int> J, const Scalar& s) {
    if ((int)I.size() != p_ || (int)J.size() != q_) throw TypeError("form term degree mismatch");
    if (s.is_zero()) return;
    if (s.dim() != n_) throw TypeError("form coefficient chart mismatch");
    for (int i : I)
        if (i < 1 || i > n_) return;  // index outside the chart: zero form
    for (int j : J)
        if (j < 1 || j > n_) return;
    int si = sort_sign(I);
    int sj = sort_sign(J);
    if (si == 0 || sj == 0) return;
    Scalar v = (si * sj == 1) ? s : -s;
    FormKey key{std::move(I), std::move(J)};
    auto [it, inserted] = c_.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

Form& Form::operator+=(const Form& o) {
    if (n_ != o.n_ || p_ != o.p_ || q_ != o.q_) throw TypeError("form bidegree/chart mismatch in +");
    for (const auto& [k, s] : o.c_) {
        auto [it, inserted] = c_.try_emplace(k, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator-(const Form& a) {
    Form out(a.n_, a.p_, a.q_);
    for (const auto& [k, s] : a.c_) out.c_[k] = -s;
    return out;
}

Form Form::scaled(const Scalar& s) const {
    Form out(n_, p_, q_);
    if (s.is_zero()) return out;
    for (const auto& [k, v] : c_) {
        Scalar t = v * s;
        if (!t.is_zero()) out.c_[k] = std::move(t);
    }
    return out;
}

Form Form::scaled(const CRat& c) const {
    Form out(n_, p_, q_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : c_) out.c_[k] = v.scaled(c);
    return out;
}

Scalar Form::scalar_value() const {
    if (p_ != 0 || q_ != 0) throw TypeError("scalar_value needs a (0,0)-form");
    if (c_.empty()) return Scalar(n_);
    return c_.begin()->second;
}

Form wedge(const Form& a, const Form& b) {
    if (a.n_ != b.n_) throw TypeError("wedge: chart dimension mismatch");
    Form out(a.n_, a.p_ + b.p_, a.q_ + b.q_);
    if (out.p_ > a.n_ || out.q_ > a.n_) return out;
    // dz^Ib must move past dzb^Ja: sign (-1)^{q_a p_b}
    const bool hop = ((a.q_ * b.p_) % 2) != 0;
    for (const auto& [ka, sa] : a.c_) {
        for (const auto& [kb, sb] : b.c_) {
            std::vector<int> I(ka.I);
            I.insert(I.end(), kb.I.begin(), kb.I.end());
            std::vector<int> J(ka.J);
            J.insert(J.end(), kb.J.begin(), kb.J.end());
            Scalar s = sa * sb;
            if (hop) s = -s;
            out.add_term(std::move(I), std::move(J), s);
        }
    }
    return out;
}

void MixedForm::add(const Form& f) {
    if (n_ == 0 && parts_.empty()) n_ = f.dim();
    if (f.dim() != n_) throw TypeError("mixed form chart mismatch");
    if (f.is_zero()) return;
    Bidegree d{f.p(), f.q()};
    auto it = parts_.find(d);
    if (it == parts_.end()) {
        parts_.emplace(d, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

Form MixedForm::component(int p, int q) const {
    auto it = parts_.find({p, q});
    if (it != parts_.end()) return it->second;
    return Form(n_, p, q);
}

MixedForm& MixedForm::operator+=(const MixedForm& o) {
    if (!o.parts_.empty() && n_ != 0 && o.n_ != n_) throw TypeError("mixed form chart mismatch");
    for (const auto& [d, f] : o.parts_) add(f);
    return *this;
}

MixedForm& MixedForm::operator-=(const MixedForm& o) { return *this += -o; }

MixedForm operator-(const MixedForm& a) {
    MixedForm out(a.n_);
    for (const auto& [d, f] : a.parts_) out.parts_.emplace(d, -f);
    return out;
}

MixedForm MixedForm::scaled(const Scalar& s) const {
    MixedForm out(n_);
    for (const auto& [d, f] : parts_) out.add(f.scaled(s));
    return out;
}

MixedForm MixedForm::scaled(const CRat& c) const {
    MixedForm out(n_);
    for (const auto& [d, f] : parts_) out.add(f.scaled(c));
    return out;
}

bool MixedForm::in_omega_leq(int k) const {
    for (const auto& [d, f] : parts_) {
        if (d.first < 2) return false;
        if (d.first + d.second != k + 2) return false;
    }
    return true;
}

bool MixedForm::pure_total_degree(int* deg) const {
    int found = -1;
    for (const auto& [d, f] : parts_) {
        int t = d.first + d.second;
        if (found == -1) found = t;
        if (t != found) return false;
    }
    if (deg) *deg = (found == -1 ? 0 : found);
    return true;
}

MixedForm wedge(const MixedForm& a, const MixedForm& b) {
    int n = a.dim() ? a.dim() : b.dim();
    MixedForm out(n);
    for (const auto& [da, fa] : a.parts())
        for (const auto& [db, fb] : b.parts()) out.add(wedge(fa, fb));
    return out;
}

bool VectorField10::is_zero() const {
    for (const auto& s : comp_)
        if (!s.is_zero()) return false;
    return true;
}

VectorField10& VectorField10::operator+=(const VectorField10& o) {
    if (n_ != o.n_) throw TypeError("vector field chart mismatch");
    for (int i = 0; i < n_; ++i) comp_[i] += o.comp_[i];
    return *this;
}

VectorField10& VectorField10::operator-=(const VectorField10& o) {
    if (n_ != o.n_) throw TypeError("vector field chart mismatch");
    for (int i = 0; i < n_; ++i) comp_[i] -= o.comp_[i];
    return *this;
}

VectorField10 operator-(const VectorField10& a) {
    VectorField10 out(a.n_);
    for (int i = 0; i < a.n_; ++i) out.comp_[i] = -a.comp_[i];
    return out;
}

VectorField10 VectorField10::scaled(const Scalar& s) const {
    VectorField10 out(n_);
    for (int i = 0; i < n_; ++i) out.comp_[i] = comp_[i] * s;
    return out;
}

Scalar VectorField10::apply(const Scalar& f) const {
    Scalar out(n_);
    for (int i = 1; i <= n_; ++i) out += comp_[i - 1] * f.dz(i);
    return out;
}

VectorField10 vf_bracket(const VectorField10& v, const VectorField10& w) {
    if (v.dim() != w.dim()) throw TypeError("vector field chart mismatch");
    int n = v.dim();
    std::vector<Scalar> comp;
    comp.reserve(n);
    for (int i = 1; i <= n; ++i) comp.push_back(v.apply(w.component(i)) - w.apply(v.component(i)));
    return VectorField10(n, std::move(comp));
}

Form del(const Form& a) {
    int n = a.dim();
    Form out(n, a.p() + 1, a.q());
    for (const auto& [k, s] : a.terms()) {
        for (int i = 1; i <= n; ++i) {
            Scalar ds = s.dz(i);
            if (ds.is_zero()) continue;
            std::vector<int> I;
            I.reserve(k.I.size() + 1);
            I.push_back(i);
            I.insert(I.end(), k.I.begin(), k.I.end());
            out.add_term(std::move(I), k.J, ds);
        }
    }
    return out;
}

Form delbar(const Form& a) {
    int n = a.dim();
    Form out(n, a.p(), a.q() + 1);
    const bool hop = (a.p() % 2) != 0;  // dzb_i crosses the dz block
    for (const auto& [k, s] : a.terms()) {
        for (int i = 1; i <= n; ++i) {
            Scalar ds = s.dzb(i);
            if (ds.is_zero()) continue;
            if (hop) ds = -ds;
            std::vector<int> J;
            J.reserve(k.J.size() + 1);
            J.push_back(i);
            J.insert(J.end(), k.J.begin(), k.J.end());
            out.add_term(k.I, std::move(J), ds);
        }
    }
    return out;
}

MixedForm ext_d(const Form& a) {
    MixedForm out(a.dim());
    out.add(del(a));
    out.add(delbar(a));
    return out;
}

MixedForm ext_d(const MixedForm& a) {
    MixedForm out(a.dim());
    for (const auto& [d, f] : a.parts()) {
        out.add(del(f));
        out.add(delbar(f));
    }
    return out;
}

MixedForm del(const MixedForm& a) {
    MixedForm out(a.dim());
    for (const auto& [d, f] : a.parts()) out.add(del(f));
    return out;
}

MixedForm delbar(const MixedForm& a) {
    MixedForm out(a.dim());
    for (const auto& [d, f] : a.parts()) out.add(delbar(f));
    return out;
}

Form contract(const VectorField10& v, const Form& a) {
    if (v.dim() != a.dim()) throw TypeError("contract: chart mismatch");
    Form out(a.dim(), a.p() - 1, a.q());
    if (a.p() == 0) return Form(a.dim(), 0, a.q() == 0 ? 0 : a.q());
    for (const auto& [k, s] : a.terms()) {
        for (std::size_t l = 0; l < k.I.size(); ++l) {
            const Scalar& vc = v.component(k.I[l]);
            if (vc.is_zero()) continue;
            Scalar coeff = vc * s;
            if (l % 2 == 1) coeff = -coeff;
            std::vector<int> I;
            I.reserve(k.I.size() - 1);
            for (std::size_t m = 0; m < k.I.size(); ++m)
                if (m != l) I.push_back(k.I[m]);
            out.add_term(std::move(I), k.J, coeff);
        }
    }
    return out;
}

MixedForm contract(const VectorField10& v, const MixedForm& a) {
    MixedForm out(a.dim());
    for (const auto& [d, f] : a.parts())
        if (d.first >= 1) out.add(contract(v, f));
    return out;
}

Form contract_bar(const std::vector<Scalar>& w, const Form& a) {
    Form out(a.dim(), a.p(), a.q() - 1);
    if (a.q() == 0) return Form(a.dim(), a.p() == 0 ? 0 : a.p(), 0);
    const bool hop = (a.p() % 2) != 0;
    for (const auto& [k, s] : a.terms()) {
        for (std::size_t l = 0; l < k.J.size(); ++l) {
            const Scalar& wc = w[k.J[l] - 1];
            if (wc.is_zero()) continue;
            Scalar coeff = wc * s;
            if ((l % 2 == 1) != hop) coeff = -coeff;
            std::vector<int> J;
            J.reserve(k.J.size() - 1);
            for (std::size_t m = 0; m < k.J.size(); ++m)
                if (m != l) J.push_back(k.J[m]);
            out.add_term(k.I, std::move(J), coeff);
        }
    }
    return out;
}

MixedForm lie_derivative(const VectorField10& v, const Form& a) {
    MixedForm out = contract(v, ext_d(a));
    out += ext_d(contract(v, a));
    return out;
}

MixedForm lie_derivative(const VectorField10& v, const MixedForm& a) {
    MixedForm out(a.dim());
    for (const auto& [d, f] : a.parts()) out += lie_derivative(v, f);
    return out;
}

namespace {

// One z-homogeneous slice: X = i_E(w_d) / (d + p), where E = sum z_i d/dz_i.
// L_E = del i_E + i_E del acts as (d+p) Id on such slices.
Form del_primitive_pure(const Form& w) {
    int n = w.dim();
    VectorField10 euler(n);
    std::vector<Scalar> ez;
    ez.reserve(n);
    for (int i = 1; i <= n; ++i) ez.push_back(Scalar::coord(n, i));
    VectorField10 E(n, ez);

    Form out(n, w.p() - 1, w.q());
    // split coefficients by z-degree
    std::map<int, Form> slices;
    for (const auto& [k, s] : w.terms()) {
        for (const auto& [deg, part] : s.z_graded()) {
            auto [it, ins] = slices.try_emplace(deg, Form(n, w.p(), w.q()));
            it->second.add_term(k.I, k.J, part);
        }
    }
    for (const auto& [deg, slice] : slices) {
        int weight = deg + w.p();
        if (weight == 0)
            throw TypeError("del_primitive: z-constant (0,q) component has no primitive");
        out += contract(E, slice).scaled(CRat(Rat(1, weight)));
    }
    return out;
}

Form delbar_primitive_pure(const Form& w) {
    int n = w.dim();
    std::vector<Scalar> ezb;
    ezb.reserve(n);
    for (int i = 1; i <= n; ++i) ezb.push_back(Scalar::coord_bar(n, i));

    Form out(n, w.p(), w.q() - 1);
    std::map<int, Form> slices;
    for (const auto& [k, s] : w.terms()) {
        for (const auto& [deg, part] : s.zb_graded()) {
            auto [it, ins] = slices.try_emplace(deg, Form(n, w.p(), w.q()));
            it->second.add_term(k.I, k.J, part);
        }
    }
    for (const auto& [deg, slice] : slices) {
        int weight = deg + w.q();
        if (weight == 0)
            throw TypeError("delbar_primitive: zb-constant (p,0) component has no primitive");
        out += contract_bar(ezb, slice).scaled(CRat(Rat(1, weight)));
    }
    return out;
}

}  // namespace

MixedForm del_primitive(const MixedForm& w) {
    MixedForm out(w.dim());
    for (const auto& [d, f] : w.parts()) out.add(del_primitive_pure(f));
    return out;
}

MixedForm delbar_primitive(const MixedForm& w) {
    MixedForm out(w.dim());
    for (const auto& [d, f] : w.parts()) out.add(delbar_primitive_pure(f));
    return out;
}

}  // namespace salab
