#include "hirota/kdvlike.hpp"

#include "hirota/dop.hpp"
#include "hirota/error.hpp"

namespace hirota {

namespace {

MultiPoly ensure_xt(const MultiPoly& f) {
    VarTablePtr table = merge_vars(f.vars(), make_vars({"x", "t"}));
    return f.with_vars(table);
}

} // namespace

MultiPoly CoefficientProfile::reassemble() const {
    if (coeffs.empty()) return MultiPoly();
    MultiPoly x = MultiPoly::variable("x", coeffs[0].vars());
    MultiPoly acc = MultiPoly::zero(coeffs[0].vars());
    for (int j = m; j >= 0; --j) {
        acc *= x;
        acc += coeffs[static_cast<std::size_t>(j)];
    }
    return acc;
}

CoefficientProfile x_profile(const MultiPoly& f, int m) {
    if (m < 0) throw usage_error("x_profile: negative degree bound");
    MultiPoly g = ensure_xt(f);
    if (g.degree("x") > m)
        throw usage_error("x_profile: polynomial exceeds the degree bound");
    CoefficientProfile prof;
    prof.m = m;
    prof.coeffs.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) prof.coeffs.push_back(g.coeff_of("x", j));
    return prof;
}

MultiPoly quadratic_residual(const MultiPoly& f0) {
    MultiPoly f = ensure_xt(f0);
    MultiPoly fx = f.derive("x");
    return wronskian_t(fx, f, "t") + Rational(3) * fx.derive("x") * fx.derive("x");
}

MultiPoly bilinear_residual(const MultiPoly& f0) {
    MultiPoly f = ensure_xt(f0);
    BilinearOpSpec mixed{3, {{"x", 1}, {"t", 1}}};
    BilinearOpSpec quartic{3, {{"x", 4}}};
    return apply(mixed, f, f) + apply(quartic, f, f);
}

namespace {

// Splits T(f) at x-degree m-1: keep_upper selects degrees >= m-1,
// otherwise degrees <= m-2.
MultiPoly band_of(const MultiPoly& f, int m, bool keep_upper) {
    if (m < 0) throw usage_error("band split: negative degree bound");
    MultiPoly g = ensure_xt(f);
    if (g.degree("x") > m)
        throw usage_error("band split: polynomial exceeds the degree bound");
    MultiPoly t = quadratic_residual(g);
    std::size_t xi = static_cast<std::size_t>(t.vars()->index_of("x"));
    MultiPoly out(t.vars());
    for (const auto& [e, c] : t.terms()) {
        bool upper = e[xi] >= m - 1;
        if (upper == keep_upper) out.add_term(e, c);
    }
    return out;
}

} // namespace

MultiPoly upper_band(const MultiPoly& f, int m) { return band_of(f, m, true); }
MultiPoly remainder_band(const MultiPoly& f, int m) { return band_of(f, m, false); }

MultiPoly band_coefficient(const CoefficientProfile& prof, int p) {
    const int m = prof.m;
    const auto at = [&](int j) -> const MultiPoly* {
        if (j < 0 || j > m) return nullptr;
        return &prof.coeffs[static_cast<std::size_t>(j)];
    };
    VarTablePtr table = prof.coeffs.empty() ? make_vars({"x", "t"}) : prof.coeffs[0].vars();
    MultiPoly acc = MultiPoly::zero(table);
    for (int j = 0; j <= m; ++j) {
        if (j == 0) continue;
        const MultiPoly* other = at(p + 1 - j);
        if (other) acc += Rational(j) * wronskian_t(prof.coeffs[static_cast<std::size_t>(j)],
                                                    *other, "t");
    }
    for (int j = 0; j <= m; ++j) {
        long w = static_cast<long>(j) * (j - 1) * (p + 4 - j) * (p + 3 - j);
        if (w == 0) continue;
        const MultiPoly* other = at(p + 4 - j);
        if (other)
            acc += Rational(3 * w) * prof.coeffs[static_cast<std::size_t>(j)] * *other;
    }
    return acc;
}

namespace {

MultiPoly assemble_band(const MultiPoly& f, int m, int p_lo, int p_hi) {
    CoefficientProfile prof = x_profile(f, m);
    VarTablePtr table = prof.coeffs.empty() ? make_vars({"x", "t"}) : prof.coeffs[0].vars();
    MultiPoly x = MultiPoly::variable("x", table);
    MultiPoly acc = MultiPoly::zero(table);
    for (int p = p_hi; p >= p_lo; --p) {
        acc *= x;
        acc += band_coefficient(prof, p);
    }
    for (int p = 0; p < p_lo; ++p) acc *= x;
    return acc;
}

} // namespace

MultiPoly upper_band_formula(const MultiPoly& f, int m) {
    return assemble_band(f, m, std::max(0, m - 1), 2 * m - 1);
}

MultiPoly remainder_band_formula(const MultiPoly& f, int m) {
    return assemble_band(f, m, 0, m - 2);
}

} // namespace hirota
