#pragma once

#include <string>

#include "salab/form.hpp"

namespace salab {

// Parses the textual form syntax used by scenario files and reports:
// rationals "3/2", complex units "1/3i", generators z1, zb2, eps, dz1, dzb2,
// operators + - * ^ and parentheses. '^' binds a following integer as a
// power; any other right operand is an exterior product, so "z1^2*zb1" and
// "dz1^dzb2" both mean what they look like. The result is a general element
// of the mixed exterior algebra on the n-dimensional chart.
MixedForm parse_expr(const std::string& text, int n);

// Typed wrappers; throw TypeError when the expression has the wrong shape.
Scalar parse_scalar(const std::string& text, int n);
Form parse_form(const std::string& text, int n, int p, int q);

// Canonical printers (inverse to the parser, bit-exact round-trip).
std::string scalar_str(const Scalar& s);
std::string form_str(const Form& f);
std::string mixed_str(const MixedForm& m);

}  // namespace salab
