#pragma once

#include <functional>
#include <optional>
#include <string>

#include "salab/cech.hpp"
#include "salab/dgla.hpp"
#include "salab/rng.hpp"

namespace salab {

// --- structured generators ------------------------------------------------

LieAlgebraSpec random_spec(Rng& rng, int max_k);

// Products of elementary unipotent and constant-diagonal factors: polynomial
// matrices with exact polynomial inverses.
GaugeMap random_gauge_map(Rng& rng, int n, const LieAlgebraSpec& spec, bool holomorphic,
                          const ScalarOpts& opt);

LieForm random_lie_form(Rng& rng, int n, const LieAlgebraSpec& spec, int p, int q,
                        const ScalarOpts& opt);

// Arbitrary theta^{1,0} + theta^{0,1} (no curvature constraint).
Connection random_connection(Rng& rng, int n, const LieAlgebraSpec& spec, const ScalarOpts& opt);

// Connection with curvature of pure type (1,1) (F^{2,0} = F^{0,2} = 0), the
// standing assumption of the deformation complex.
Connection random_connection_f11(Rng& rng, int n, const LieAlgebraSpec& spec,
                                 const ScalarOpts& opt);

// theta^{0,1} = 0 and F^{0,2} = 0 automatically; used where a holomorphic
// trivialization is fixed.
Connection random_connection_apstyle(Rng& rng, int n, const LieAlgebraSpec& spec,
                                     const ScalarOpts& opt);

// Integrable (H, theta): theta from the pure-(1,1) family, H built with the
// dbar-homotopy so that dH + c(F^F) = 0 exactly.
StringData random_integrable_data(Rng& rng, int n, const LieAlgebraSpec& spec,
                                  const ScalarOpts& opt);

SectionQ random_section(Rng& rng, int n, const LieAlgebraSpec& spec, const ScalarOpts& opt);
LElement random_lelement(Rng& rng, int n, const LieAlgebraSpec& spec, int k,
                         const ScalarOpts& opt);
GaugeElement random_gauge_element(Rng& rng, int n, const LieAlgebraSpec& spec, bool holomorphic,
                                  const ScalarOpts& opt);

// Guaranteed Maurer-Cartan witness: move base through the gauge orbit, then
// pull back along hat_epsilon (the (1,0)-leg is restored by an a-field).
LElement gauge_orbit_mc_witness(const StringData& base, const GaugeElement& x);

// --- property suite --------------------------------------------------------

struct PropertyCtx {
    Rng* rng;
    int n;
    LieAlgebraSpec spec;
    ScalarOpts opt;
};

struct Property {
    std::string name;
    // Returns a witness description on failure.
    std::function<std::optional<std::string>(PropertyCtx&)> run;
};

const std::vector<Property>& property_suite();

struct FuzzConfig {
    std::uint64_t seed = 1;
    int cases = 100;
    int max_n = 2;
    int max_k = 2;
    int max_degree = 2;
    bool stop_on_fail = true;
};

struct FuzzFailure {
    std::string property;
    int case_index = 0;
    std::string witness;
};

struct FuzzReport {
    int cases_run = 0;
    std::vector<FuzzFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Deterministic from the config; each case runs one property round-robin.
// On failure the witness is re-derived at shrunken generation bounds first.
FuzzReport run_fuzz(const FuzzConfig& cfg);

}  // namespace salab
