#pragma once

#include <cstdint>

#include "salab/form.hpp"

namespace salab {

// Deterministic generator (splitmix64): identical streams on every platform,
// so fuzz reports are reproducible from the seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Inclusive range.
    int range(int lo, int hi) { return lo + (int)(next() % (std::uint64_t)(hi - lo + 1)); }
    bool chance(int num, int den) { return range(1, den) <= num; }

private:
    std::uint64_t s_;
};

struct ScalarOpts {
    int max_degree = 2;
    int terms = 2;
    bool allow_zbar = true;
    bool allow_eps = false;
    int coeff_range = 3;  // numerators in [-3,3]
    bool rational = false;  // allow denominators 2..3
};

Scalar random_scalar(Rng& rng, int n, const ScalarOpts& opt);
Form random_form(Rng& rng, int n, int p, int q, const ScalarOpts& opt);
VectorField10 random_vector_field(Rng& rng, int n, const ScalarOpts& opt);

}  // namespace salab
