#pragma once

namespace salab::mutation {

// Self-test fault injection: flips one sign in one formula so the fuzz suite
// can demonstrate it notices. Off in normal operation.
enum class Site {
    none,
    dorfman_pairing_sign,   // 2c(del^theta r, t) term in the Dorfman bracket
    group_product_c_sign,   // pairing correction in the S / gauge group product
    dgla_bracket_sign,      // (-1)^k factor in the DGLA bracket
};

Site active();
void set_active(Site s);

inline int flip_if(Site s) { return active() == s ? -1 : 1; }

}  // namespace salab::mutation
