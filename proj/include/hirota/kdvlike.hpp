#ifndef HIROTA_KDVLIKE_HPP
#define HIROTA_KDVLIKE_HPP

#include <vector>

#include "hirota/multipoly.hpp"

namespace hirota {

// x-coefficient profile of f with deg_x(f) <= m: index j holds f_j, so
// that sum_j f_j * x^j reassembles f exactly.
struct CoefficientProfile {
    int m = 0;
    std::vector<MultiPoly> coeffs;

    MultiPoly reassemble() const;
};

CoefficientProfile x_profile(const MultiPoly& f, int m);

// T f = f*f_xt - f_x*f_t + 3*(f_xx)^2. Polynomial f solves the bilinear
// equation iff this vanishes; equals half of bilinear_residual(f).
MultiPoly quadratic_residual(const MultiPoly& f);

// (D_{3,x}D_{3,t} + D_{3,x}^4) f.f, the full left side of the bilinear
// equation.
MultiPoly bilinear_residual(const MultiPoly& f);

// Degree-band split of T(f) for an x-degree bound m (requires
// deg_x(f) <= m): the remainder band R holds x-degrees <= m-2, the upper
// band B holds x-degrees >= m-1, and B + R = T exactly.
MultiPoly upper_band(const MultiPoly& f, int m);
MultiPoly remainder_band(const MultiPoly& f, int m);

// Direct coefficient formula for the x^p coefficient of T(f), computed
// from the profile:
//   sum_j j*W_t(f_j, f_{p+1-j}) +
//   3*sum_j j(j-1)(p+4-j)(p+3-j)*f_j*f_{p+4-j}.
MultiPoly band_coefficient(const CoefficientProfile& prof, int p);

// Band operators assembled from band_coefficient; used as the formula
// path against the band-split oracle above.
MultiPoly upper_band_formula(const MultiPoly& f, int m);
MultiPoly remainder_band_formula(const MultiPoly& f, int m);

} // namespace hirota

#endif
