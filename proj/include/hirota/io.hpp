#ifndef HIROTA_IO_HPP
#define HIROTA_IO_HPP

#include <string>

#include "hirota/multipoly.hpp"

namespace hirota {

// Canonical JSON form:
//   {"vars":["x","t"],"terms":[{"coeff":"num/den","exps":[e1,e2]}]}
// Terms are sorted lexicographically by exponent vector; coefficients are
// reduced fractions with optional leading minus ("/1" omitted).
std::string to_json(const MultiPoly& p, int indent = -1);
MultiPoly from_json(const std::string& text);

// Human-readable form, e.g. "x^3 + c2*x^2 + 1/3*c2^2*x + 36*t + c0".
// Terms are emitted in descending exponent order; the output is accepted
// back by parse_poly.
std::string to_text(const MultiPoly& p);

// Display-only LaTeX, e.g. "x^{3}+c_{2}x^{2}+\frac{1}{3}c_{2}^{2}x+36t+c_{0}".
// A trailing digit run in a variable name becomes a subscript.
std::string to_latex(const MultiPoly& p);

// Parses +, -, *, ^ expressions over integer/rational literals ("36",
// "1/3") and variables. No implicit multiplication and no general
// division; exponents are nonnegative integers.
//
// The one-argument form collects variables in order of first appearance;
// the two-argument form requires every variable to be in the given table.
MultiPoly parse_poly(const std::string& text);
MultiPoly parse_poly(const std::string& text, const VarTablePtr& vars);

} // namespace hirota

#endif
