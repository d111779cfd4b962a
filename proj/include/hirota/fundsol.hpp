#ifndef HIROTA_FUNDSOL_HPP
#define HIROTA_FUNDSOL_HPP

#include <map>
#include <string>
#include <vector>

#include "hirota/multipoly.hpp"

namespace hirota {

// Monic generator of the upper-band kernel at x-degree m, together with
// its coefficient polynomials. coeffs[k] multiplies x^k; coeffs[m] = 1.
// Constants are named after the x-power they first multiply: the base
// cases contribute c_{m-1}, c_{m-2}, then each integration step for
// coeffs[k] introduces c_k.
struct FundamentalFamily {
    int m = 0;
    std::vector<std::string> constants;  // in order of introduction
    std::vector<MultiPoly> coeffs;       // size m+1, over [x, t, c...]
    MultiPoly generator;                 // sum_k coeffs[k] * x^k, monic in x
};

// Builds the degree-m family by integrating the coefficient recursion
// downward from the monic top coefficient. upper_band(generator, m)
// vanishes identically in t and all constants.
FundamentalFamily build_family(int m);

// Extension of the family coefficients in the degree variable:
// value = Q_k over {m, t, c_1..c_k}, with Q_k(t) = P_{m,m-k}(t) after
// the constant alignment below.
struct QPoly {
    int k = 0;
    MultiPoly value;
};

// Symmetrized recursion (primary path):
//   Q_k = (1/k) { sum_{l=1}^{k-1} (k-2l)/2 * int W_t(Q_l, Q_{k-l}) dt
//         + 3 sum_{l=0}^{k-3} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2)
//               * int Q_l Q_{k-l-3} dt } + c_k,
// with Q_0 = 1, Q_1 = c_1, Q_2 = c_2.
QPoly build_q(int k);
std::vector<QPoly> build_q_sequence(int k);

// Same recursion with the unsymmetrized (m-l) Wronskian prefactor; kept
// as a cross-check oracle for the symmetrized path.
QPoly build_q_unsymmetrized(int k);

// Bridge between the two constant namings: the extension constant c_j
// corresponds to the family constant c_{m-j}.
std::map<std::string, std::string> alignment_map(int k, int m_value);

// Substitutes m = m_value and renames constants to the degree-m family
// naming. Requires k <= m_value (otherwise the family index m-k would be
// negative).
MultiPoly specialize_to_family(const QPoly& q, int m_value);

// Substitutes m = m_value and binds constants from the map; throws with
// the list of unbound names if any constant appearing in the value has no
// binding.
MultiPoly specialize(const QPoly& q, int m_value,
                     const std::map<std::string, MultiPoly>& constants);

} // namespace hirota

#endif
