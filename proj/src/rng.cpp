#include "salab/rng.hpp"

namespace salab {

Scalar random_scalar(Rng& rng, int n, const ScalarOpts& opt) {
    Scalar out(n);
    for (int t = 0; t < opt.terms; ++t) {
        Mono m(2 * n + 1, 0);
        int budget = rng.range(0, opt.max_degree);
        for (int d = 0; d < budget; ++d) {
            int v = rng.range(0, n - 1);
            if (opt.allow_zbar && rng.chance(1, 2))
                m[n + v] += 1;
            else
                m[v] += 1;
        }
        if (opt.allow_eps && rng.chance(1, 3)) m[2 * n] = 1;
        int num = rng.range(-opt.coeff_range, opt.coeff_range);
        int den = opt.rational ? rng.range(1, 3) : 1;
        CRat c{Rat(num, den)};
        if (rng.chance(1, 3)) c += CRat(Rat(0), Rat(rng.range(-opt.coeff_range, opt.coeff_range), den));
        out.add_term(m, c);
    }
    return out;
}

Form random_form(Rng& rng, int n, int p, int q, const ScalarOpts& opt) {
    Form out(n, p, q);
    if (p > n || q > n) return out;
    int terms = rng.range(1, 2);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> I, J;
        // draw strictly increasing tuples by sampling then deduplicating
        while ((int)I.size() < p) {
            int v = rng.range(1, n);
            bool seen = false;
            for (int x : I) seen |= (x == v);
            if (!seen) I.push_back(v);
        }
        while ((int)J.size() < q) {
            int v = rng.range(1, n);
            bool seen = false;
            for (int x : J) seen |= (x == v);
            if (!seen) J.push_back(v);
        }
        out.add_term(std::move(I), std::move(J), random_scalar(rng, n, opt));
    }
    return out;
}

VectorField10 random_vector_field(Rng& rng, int n, const ScalarOpts& opt) {
    std::vector<Scalar> comp;
    comp.reserve(n);
    for (int i = 0; i < n; ++i) comp.push_back(random_scalar(rng, n, opt));
    return VectorField10(n, std::move(comp));
}

}  // namespace salab
