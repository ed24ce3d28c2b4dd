#pragma once

#include "salab/fuzz.hpp"
#include "salab/textio.hpp"

namespace ts {

using namespace salab;

inline Scalar S(const std::string& text, int n) { return parse_scalar(text, n); }
inline MixedForm M(const std::string& text, int n) { return parse_expr(text, n); }

// Parses an expression expected to be concentrated at one bidegree.
inline Form F(const std::string& text, int n, int p, int q) { return parse_form(text, n, p, q); }

inline VectorField10 VF(int n, std::initializer_list<const char*> comps) {
    std::vector<Scalar> c;
    for (const char* t : comps) c.push_back(S(t, n));
    return VectorField10(n, std::move(c));
}

// k x k matrix of scalars from expression strings, row-major.
inline SMatrix SM(int n, std::initializer_list<const char*> entries) {
    SMatrix m;
    for (const char* t : entries) m.push_back(S(t, n));
    return m;
}

inline LieForm LF(int n, const LieAlgebraSpec& spec, int p, int q,
                  std::initializer_list<const char*> entries) {
    std::vector<Form> forms;
    for (const char* t : entries) forms.push_back(F(t, n, p, q));
    return LieForm::from_matrix(n, spec, p, q, std::move(forms));
}

inline GaugeMap GM(int n, const LieAlgebraSpec& spec, std::initializer_list<const char*> g,
                   std::initializer_list<const char*> ginv) {
    return GaugeMap(n, spec, SM(n, g), SM(n, ginv));
}

}  // namespace ts
