#ifndef HIROTA_LEADING_HPP
#define HIROTA_LEADING_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirota/fundsol.hpp"
#include "hirota/multipoly.hpp"

namespace hirota {

// Time-dependent remainder polynomials of a monic family: the remainder
// band of the generator equals sum_k polys[k] * x^(2m-k-1) over
// m+1 <= k <= 2m-1.
struct RemainderSet {
    int m = 0;
    std::map<int, MultiPoly> polys;
};

// Formula path:
//   R_k = sum_{l=k-m}^{m} (k-2l)/2 * W_t(Q_l, Q_{k-l})
//       + 3 sum_{l=k-m-1}^{m-2} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2) Q_l Q_{k-l-3},
// with Q_l the family coefficient coeffs[m-l]. Tests pin this against the
// x-coefficients of the remainder band of the generator.
RemainderSet remainder_polys(const FundamentalFamily& fam);

// Leading t-coefficients x_k of the extension polynomials Q_k, which only
// involve m, c1 and c2. z_q = x_{3q} is a pure polynomial in m.
class LeadingTable {
public:
    explicit LeadingTable(int max_index);

    int max_index() const { return static_cast<int>(x_.size()) - 1; }
    // x_k: coefficient of t^floor(k/3) in Q_k.
    const MultiPoly& x(int k) const;
    // z_q = x_{3q}, a polynomial in m alone.
    const MultiPoly& z(int q) const { return x(3 * q); }

private:
    std::vector<MultiPoly> x_;
};

MultiPoly leading_x(int k);
MultiPoly z_poly(int q);

// Leading t-coefficient of R_k for the degree bound m_value, from the
// leading coefficients alone:
//   sum_{l=k-m}^{m} (k-2l)/2 * (2u-q) x_l x_{k-l}
// + 3 sum_{l=k-m-1}^{m-2} (m-l)(m-l-1)(m+l-k+3)(m+l-k+2) x_l x_{k-l-3},
// over l whose residue mod 3 does not exceed k's. For k ≡ 0 (mod 3) the
// result is a pure rational constant. k must lie in [m+1, 2m-1].
MultiPoly leading_y(int k, int m_value, const LeadingTable& table);
MultiPoly leading_y(int k, int m_value);

// The Wronskian contribution to the leading coefficient switches sign
// between the extraction-consistent orientation (matches leading_y and
// the band split of the actual generator) and the mirrored orientation
// (under which the classical factorized forms hold).
enum class LeadingOrientation { extraction, mirrored };

// Per-congruence-class leading polynomial of R_{3q} as a polynomial in m
// through the z's, for m = 3s + cls:
//   cls 0: +-(3/2) sum (q-2u)^2 z_u z_{q-u}
//          + 27 sum (s-u)(3s-3u-1)(s+u-q+1)(3s+3u-3q+2) z_u z_{q-u-1}
//   cls 1: +-(3/2) sum (q-2u)^2 z_u z_{q-u}
//          + 27 sum (s-u)(3(s-u)+1)(s+u-q+1)(3s+3u-3q+4) z_u z_{q-u-1}
//   cls 2: +-(3/2) sum (q-2u)^2 z_u z_{q-u}
//          + 3 sum (3(s-u)+2)(3(s-u)+1)(3(s-q+u+1)+2)(3(s-q+u+1)+1)
//                z_u z_{q-u-1}
MultiPoly class_leading_poly(int cls, int s, int q, LeadingOrientation orientation,
                             const LeadingTable& table);
MultiPoly class_leading_poly(int cls, int s, int q, LeadingOrientation orientation);

struct FactorizationCheck {
    std::string name;
    int cls = 0;
    int s = 0;
    LeadingOrientation orientation = LeadingOrientation::mirrored;
    bool holds = false;
    MultiPoly difference;  // lhs - rhs; zero iff the identity holds
};

// Expands and compares the degree-top factorization identities of the
// class leading polynomials, in both orientations:
//   cls 0: Y_{2s-1} = 3 z_{s-1} (z_s + 36 z_{s-1})   [mirrored]
//          Y_{2s-1} = 3 z_{s-1} (36 z_{s-1} - z_s)   [extraction]
//   cls 1: same with 144 in place of 36
//   cls 2: Y_{2s+1} = z_s^2          [claimed; fails: the expansion
//          yields 12 z_s^2 in both orientations]
//          Y_{2s+1} = 12 z_s^2       [verified]
// cls 2 rows need s >= 1, the others s >= 2.
std::vector<FactorizationCheck> factorization_checks(int s);

// Exact-evaluation evidence that a polynomial in m is positive for every
// integer m >= 5: a sweep over 5..sweep_to plus an all-nonnegative shift
// of the derivative certifying monotone growth past the sweep.
bool positive_for_all_integers_ge5(const MultiPoly& poly_in_m, long sweep_to);

// Verdict for a spatial degree m: either a solution family exists (m <= 4,
// produced by the solutions layer) or the designated z-polynomial is
// nonzero at m, certifying nonexistence.
struct Certificate {
    int m = 0;
    bool exists = false;
    std::string witness_poly;  // e.g. "z1", "z2+36z1", "z2+144z1", "Tf"
    Rational witness_value;
    // All evaluated designated polynomials: (name, exact value at m).
    std::vector<std::pair<std::string, Rational>> checks;
    // Direct mode: (k, leading t-coefficient of R_k at m) for the k == 0
    // (mod 3) indices the degree argument consumes.
    std::vector<std::pair<int, Rational>> direct_leading;

    std::string to_json(int indent = -1) const;
};

// Requires m >= 5 (smaller degrees are classified by the solutions
// module). Evaluates the designated z-polynomials per m mod 3 and returns
// a nonexistence certificate; with direct = true, additionally recomputes
// leading_y for the consumed k ≡ 0 (mod 3) indices.
Certificate nonexistence_certificate(int m, bool direct = false);

} // namespace hirota

#endif
