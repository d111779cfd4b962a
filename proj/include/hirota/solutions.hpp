#ifndef HIROTA_SOLUTIONS_HPP
#define HIROTA_SOLUTIONS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hirota/leading.hpp"
#include "hirota/multipoly.hpp"

namespace hirota {

// Monic degree-m polynomial with quadratic_residual(f) = 0 identically in
// the remaining free constants, together with the substitutions that were
// applied to the raw family constants to get there.
struct SolutionFamily {
    int m = 0;
    MultiPoly f;
    std::vector<std::pair<std::string, MultiPoly>> constraints;

    std::string to_json(int indent = -1) const;
    std::string to_latex() const;
};

using ClassifyResult = std::variant<SolutionFamily, Certificate>;

// Full classification by spatial degree: explicit families for
// m in {0, 1, 3, 4}, the constant obstruction at m = 2, and nonexistence
// certificates for m >= 5.
ClassifyResult classify(int m);

// u = numerator / denominator, kept unreduced.
struct RationalSolution {
    MultiPoly numerator;
    MultiPoly denominator;
};

// u = 2 f_x / f. Throws on the zero polynomial.
RationalSolution log_derivative(const MultiPoly& f);

// Residual of u_t + (3/2)u_x^2 + (3/2)u^2 u_x + (3/8)u^4 brought over the
// common denominator 8 D^4: returns
//   8(N_t D - N D_t)D^2 + 12(N_x D - N D_x)^2 + 12 N^2 (N_x D - N D_x) + 3 N^4,
// which is the zero polynomial iff u solves the equation.
MultiPoly kdvlike_residual_numerator(const RationalSolution& u);

} // namespace hirota

#endif
