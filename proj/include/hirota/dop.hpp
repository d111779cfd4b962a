#ifndef HIROTA_DOP_HPP
#define HIROTA_DOP_HPP

#include <string>
#include <utility>
#include <vector>

#include "hirota/multipoly.hpp"

namespace hirota {

// D_{p,x1}^{n1} ... D_{p,xk}^{nk}: a prime-like parameter p >= 2 plus
// (variable, power) factors with distinct variables.
struct BilinearOpSpec {
    int p = 2;
    std::vector<std::pair<std::string, int>> factors;

    // Grammar: D(p;var^pow[,var^pow]*), e.g. "D(3;x^4)" or "D(2;x^1,t^1)".
    static BilinearOpSpec parse(const std::string& text);

    std::string str() const;
};

// alpha_p^m = (-1)^(m mod p), 0 <= m mod p < p. Requires p >= 2, m >= 0.
Rational alpha_pow(int p, int m);

// Expands the operator on the pair (f, g): sum over multi-indices j of
//   prod binomial(n_i, j_i) * alpha_p^(sum j_i) * (d^(n-j) f) * (d^j g),
// with alpha exponents accumulated additively across factors before the
// residue rule is applied.
MultiPoly apply(const BilinearOpSpec& op, const MultiPoly& f, const MultiPoly& g);

} // namespace hirota

#endif
