#include "hirota/fundsol.hpp"

#include <algorithm>

#include "hirota/error.hpp"

namespace hirota {

namespace {

std::string cname(int i) { return "c" + std::to_string(i); }

} // namespace

FundamentalFamily build_family(int m) {
    if (m < 0) throw usage_error("build_family: negative degree");

    std::vector<std::string> names = {"x", "t"};
    for (int i = 0; i < m; ++i) names.push_back(cname(i));
    VarTablePtr table = make_vars(std::move(names));

    FundamentalFamily fam;
    fam.m = m;
    fam.coeffs.assign(static_cast<std::size_t>(m) + 1, MultiPoly::zero(table));
    fam.coeffs[static_cast<std::size_t>(m)] = MultiPoly::constant(Rational(1), table);
    if (m >= 1) {
        fam.coeffs[static_cast<std::size_t>(m - 1)] = MultiPoly::variable(cname(m - 1), table);
        fam.constants.push_back(cname(m - 1));
    }
    if (m >= 2) {
        fam.coeffs[static_cast<std::size_t>(m - 2)] = MultiPoly::variable(cname(m - 2), table);
        fam.constants.push_back(cname(m - 2));
    }

    const auto& P = fam.coeffs;
    for (int k = m - 3; k >= 0; --k) {
        MultiPoly rhs = MultiPoly::zero(table);
        for (int j = k + 1; j <= m - 1; ++j)
            rhs += Rational(j) * wronskian_t(P[static_cast<std::size_t>(j)],
                                             P[static_cast<std::size_t>(k + m - j)], "t");
        for (int j = k + 3; j <= m; ++j) {
            long w = static_cast<long>(j) * (j - 1) * (k + m + 3 - j) * (k + m + 2 - j);
            rhs += Rational(3 * w) * P[static_cast<std::size_t>(j)] *
                   P[static_cast<std::size_t>(k + m + 3 - j)];
        }
        fam.coeffs[static_cast<std::size_t>(k)] =
            Rational(1, m - k) * rhs.integrate("t") + MultiPoly::variable(cname(k), table);
        fam.constants.push_back(cname(k));
    }

    MultiPoly x = MultiPoly::variable("x", table);
    MultiPoly gen = MultiPoly::zero(table);
    for (int k = m; k >= 0; --k) {
        gen *= x;
        gen += fam.coeffs[static_cast<std::size_t>(k)];
    }
    fam.generator = gen;
    return fam;
}

namespace {

VarTablePtr q_table(int k) {
    std::vector<std::string> names = {"m", "t"};
    for (int i = 1; i <= k; ++i) names.push_back(cname(i));
    return make_vars(std::move(names));
}

std::vector<QPoly> build_q_impl(int k, bool symmetrized) {
    if (k < 0) throw usage_error("build_q: negative index");
    std::vector<QPoly> qs;
    qs.reserve(static_cast<std::size_t>(k) + 1);
    qs.push_back({0, MultiPoly::constant(Rational(1), q_table(0))});
    for (int n = 1; n <= k; ++n) {
        VarTablePtr table = q_table(n);
        if (n <= 2) {
            qs.push_back({n, MultiPoly::variable(cname(n), table)});
            continue;
        }
        MultiPoly mvar = MultiPoly::variable("m", table);
        MultiPoly acc = MultiPoly::zero(table);
        for (int l = 1; l <= n - 1; ++l) {
            MultiPoly w = wronskian_t(qs[static_cast<std::size_t>(l)].value,
                                      qs[static_cast<std::size_t>(n - l)].value, "t");
            if (symmetrized) {
                acc += Rational(n - 2 * l, 2) * w.integrate("t");
            } else {
                acc += (mvar - MultiPoly::constant(Rational(l), table)) * w.integrate("t");
            }
        }
        for (int l = 0; l <= n - 3; ++l) {
            MultiPoly weight = MultiPoly::constant(Rational(3), table);
            for (long shift : {-static_cast<long>(l), -static_cast<long>(l) - 1,
                               static_cast<long>(l - n + 3), static_cast<long>(l - n + 2)})
                weight *= mvar + MultiPoly::constant(Rational(shift), table);
            acc += weight * (qs[static_cast<std::size_t>(l)].value *
                             qs[static_cast<std::size_t>(n - l - 3)].value)
                                .integrate("t");
        }
        MultiPoly q = Rational(1, n) * acc + MultiPoly::variable(cname(n), table);
        qs.push_back({n, q.with_vars(table)});
    }
    return qs;
}

} // namespace

std::vector<QPoly> build_q_sequence(int k) { return build_q_impl(k, true); }

QPoly build_q(int k) { return build_q_impl(k, true).back(); }

QPoly build_q_unsymmetrized(int k) { return build_q_impl(k, false).back(); }

std::map<std::string, std::string> alignment_map(int k, int m_value) {
    if (k > m_value)
        throw usage_error("alignment_map: extension index exceeds the family degree");
    std::map<std::string, std::string> renames;
    for (int j = 1; j <= k; ++j) renames[cname(j)] = cname(m_value - j);
    return renames;
}

MultiPoly specialize_to_family(const QPoly& q, int m_value) {
    if (m_value < 0) throw usage_error("specialize: negative degree");
    MultiPoly at_m = q.value.substitute("m", Rational(m_value));
    return at_m.rename_vars(alignment_map(q.k, m_value));
}

MultiPoly specialize(const QPoly& q, int m_value,
                     const std::map<std::string, MultiPoly>& constants) {
    if (m_value < 0) throw usage_error("specialize: negative degree");
    MultiPoly out = q.value.substitute("m", Rational(m_value));
    std::vector<std::string> missing;
    for (int j = 1; j <= q.k; ++j) {
        const std::string name = cname(j);
        if (!out.depends_on(name)) continue;
        auto it = constants.find(name);
        if (it == constants.end())
            missing.push_back(name);
        else
            out = out.substitute(name, it->second);
    }
    if (!missing.empty()) {
        std::string msg = "specialize: unbound constants:";
        for (const auto& n : missing) msg += " " + n;
        throw error(msg);
    }
    return out;
}

} // namespace hirota
