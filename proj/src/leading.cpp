#include "hirota/leading.hpp"

#include <json.hpp>

#include "hirota/error.hpp"

namespace hirota {

RemainderSet remainder_polys(const FundamentalFamily& fam) {
    const int m = fam.m;
    RemainderSet out;
    out.m = m;
    const auto Q = [&](int l) -> const MultiPoly& {
        return fam.coeffs[static_cast<std::size_t>(m - l)];
    };
    for (int k = m + 1; k <= 2 * m - 1; ++k) {
        MultiPoly acc = MultiPoly::zero(fam.generator.vars());
        for (int l = k - m; l <= m; ++l)
            acc += Rational(k - 2 * l, 2) * wronskian_t(Q(l), Q(k - l), "t");
        for (int l = k - m - 1; l <= m - 2; ++l) {
            long w = static_cast<long>(m - l) * (m - l - 1) * (m + l - k + 3) *
                     (m + l - k + 2);
            if (w == 0) continue;
            acc += Rational(3 * w) * Q(l) * Q(k - l - 3);
        }
        out.polys.emplace(k, std::move(acc));
    }
    return out;
}

LeadingTable::LeadingTable(int max_index) {
    if (max_index < 0) throw usage_error("leading table: negative index");
    auto qs = build_q_sequence(max_index);
    VarTablePtr table = make_vars({"m", "c1", "c2"});
    x_.reserve(qs.size());
    for (const auto& q : qs) {
        MultiPoly lead = q.value.coeff_of("t", q.k / 3);
        x_.push_back(lead.with_vars(table));
    }
}

const MultiPoly& LeadingTable::x(int k) const {
    if (k < 0 || k > max_index())
        throw usage_error("leading table: index out of range");
    return x_[static_cast<std::size_t>(k)];
}

MultiPoly leading_x(int k) { return LeadingTable(k).x(k); }

MultiPoly z_poly(int q) {
    if (q < 0) throw usage_error("z_poly: negative index");
    return LeadingTable(3 * q).z(q);
}

MultiPoly leading_y(int k, int m_value, const LeadingTable& table) {
    if (m_value < 1 || k < m_value + 1 || k > 2 * m_value - 1)
        throw usage_error("leading_y: index must lie in [m+1, 2m-1]");
    if (table.max_index() < m_value)
        throw usage_error("leading_y: leading table too short");
    const int q = k / 3;
    const int r = k % 3;
    const auto x_at = [&](int l) {
        return table.x(l).substitute("m", Rational(m_value));
    };
    MultiPoly acc = MultiPoly::zero(make_vars({"m", "c1", "c2"}));
    for (int l = k - m_value; l <= m_value; ++l) {
        if (l < 0 || l % 3 > r) continue;
        const int u = l / 3;
        acc += Rational(k - 2 * l, 2) * Rational(2 * u - q) * x_at(l) * x_at(k - l);
    }
    for (int l = k - m_value - 1; l <= m_value - 2; ++l) {
        if (l < 0 || l % 3 > r) continue;
        long w = static_cast<long>(m_value - l) * (m_value - l - 1) *
                 (m_value + l - k + 3) * (m_value + l - k + 2);
        if (w == 0) continue;
        acc += Rational(3 * w) * x_at(l) * x_at(k - l - 3);
    }
    return acc;
}

MultiPoly leading_y(int k, int m_value) {
    LeadingTable table(m_value);
    return leading_y(k, m_value, table);
}

MultiPoly class_leading_poly(int cls, int s, int q, LeadingOrientation orientation,
                             const LeadingTable& table) {
    if (cls < 0 || cls > 2) throw usage_error("class_leading_poly: class must be 0, 1 or 2");
    const int q_max = cls == 0 ? 2 * s - 1 : (cls == 1 ? 2 * s : 2 * s + 1);
    if (q < s + 1 || q > q_max)
        throw usage_error("class_leading_poly: q out of range for this class");
    const Rational w_sign =
        orientation == LeadingOrientation::extraction ? Rational(-1) : Rational(1);

    MultiPoly acc = MultiPoly::zero(make_vars({"m"}));
    for (int u = q - s; u <= s; ++u)
        acc += w_sign * Rational(3 * static_cast<long>(q - 2 * u) * (q - 2 * u), 2) *
               table.z(u) * table.z(q - u);

    const int u_lo = cls == 2 ? q - s - 1 : q - s;
    const int u_hi = cls == 2 ? s : s - 1;
    for (int u = u_lo; u <= u_hi; ++u) {
        long w = 0;
        switch (cls) {
            case 0:
                w = 27L * (s - u) * (3 * s - 3 * u - 1) * (s + u - q + 1) *
                    (3 * s + 3 * u - 3 * q + 2);
                break;
            case 1:
                w = 27L * (s - u) * (3 * (s - u) + 1) * (s + u - q + 1) *
                    (3 * s + 3 * u - 3 * q + 4);
                break;
            default:
                w = 3L * (3 * (s - u) + 2) * (3 * (s - u) + 1) *
                    (3 * (s - q + u + 1) + 2) * (3 * (s - q + u + 1) + 1);
                break;
        }
        if (w == 0) continue;
        acc += Rational(w) * table.z(u) * table.z(q - u - 1);
    }
    return acc;
}

MultiPoly class_leading_poly(int cls, int s, int q, LeadingOrientation orientation) {
    LeadingTable table(3 * q);
    return class_leading_poly(cls, s, q, orientation, table);
}

std::vector<FactorizationCheck> factorization_checks(int s) {
    if (s < 1) throw usage_error("factorization_checks: s must be >= 1");
    std::vector<FactorizationCheck> out;
    LeadingTable table(3 * (2 * s + 1));

    const auto push = [&](std::string name, int cls, LeadingOrientation ori,
                          const MultiPoly& lhs, const MultiPoly& rhs) {
        FactorizationCheck chk;
        chk.name = std::move(name);
        chk.cls = cls;
        chk.s = s;
        chk.orientation = ori;
        chk.difference = lhs - rhs;
        chk.holds = chk.difference.is_zero();
        out.push_back(std::move(chk));
    };

    if (s >= 2) {
        const MultiPoly& zs = table.z(s);
        const MultiPoly& zs1 = table.z(s - 1);
        push("class0: Y_{2s-1} = 3 z_{s-1} (z_s + 36 z_{s-1})", 0,
             LeadingOrientation::mirrored,
             class_leading_poly(0, s, 2 * s - 1, LeadingOrientation::mirrored, table),
             Rational(3) * zs1 * (zs + Rational(36) * zs1));
        push("class0: Y_{2s-1} = 3 z_{s-1} (36 z_{s-1} - z_s)", 0,
             LeadingOrientation::extraction,
             class_leading_poly(0, s, 2 * s - 1, LeadingOrientation::extraction, table),
             Rational(3) * zs1 * (Rational(36) * zs1 - zs));
        push("class1: Y_{2s-1} = 3 z_{s-1} (z_s + 144 z_{s-1})", 1,
             LeadingOrientation::mirrored,
             class_leading_poly(1, s, 2 * s - 1, LeadingOrientation::mirrored, table),
             Rational(3) * zs1 * (zs + Rational(144) * zs1));
        push("class1: Y_{2s-1} = 3 z_{s-1} (144 z_{s-1} - z_s)", 1,
             LeadingOrientation::extraction,
             class_leading_poly(1, s, 2 * s - 1, LeadingOrientation::extraction, table),
             Rational(3) * zs1 * (Rational(144) * zs1 - zs));
    }
    {
        const MultiPoly& zs = table.z(s);
        MultiPoly lhs = class_leading_poly(2, s, 2 * s + 1, LeadingOrientation::mirrored, table);
        push("class2: Y_{2s+1} = z_s^2", 2, LeadingOrientation::mirrored, lhs, zs * zs);
        push("class2: Y_{2s+1} = 12 z_s^2", 2, LeadingOrientation::mirrored, lhs,
             Rational(12) * zs * zs);
    }
    return out;
}

namespace {

using int128 = __int128;

int128 eval_int_poly(const std::vector<long>& coeffs, long m) {
    int128 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * m + *it;
    return acc;
}

std::vector<long> integer_coeffs_in_m(const MultiPoly& p) {
    int deg = p.degree("m");
    std::vector<long> coeffs(static_cast<std::size_t>(std::max(deg, 0)) + 1, 0);
    for (int i = 0; i <= deg; ++i) {
        Rational c = p.coeff_of("m", i).constant_value();
        if (!c.is_integer())
            throw usage_error("positivity sweep: expected integer coefficients");
        coeffs[static_cast<std::size_t>(i)] = c.to_long();
    }
    return coeffs;
}

} // namespace

bool positive_for_all_integers_ge5(const MultiPoly& poly_in_m, long sweep_to) {
    for (const auto& name : poly_in_m.vars()->names())
        if (name != "m" && poly_in_m.depends_on(name))
            throw usage_error("positivity sweep: polynomial must depend on m only");
    std::vector<long> coeffs = integer_coeffs_in_m(poly_in_m);
    if (sweep_to < 11) sweep_to = 11;
    for (long m = 5; m <= sweep_to; ++m)
        if (eval_int_poly(coeffs, m) <= 0) return false;

    // Monotone growth past the sweep: the derivative, shifted to start at
    // the sweep boundary, must have nonnegative coefficients and positive
    // value there.
    MultiPoly deriv = poly_in_m.derive("m");
    VarTablePtr mv = make_vars({"m"});
    MultiPoly shifted = deriv.substitute(
        "m", MultiPoly::variable("m", mv) + MultiPoly::constant(Rational(sweep_to), mv));
    for (const auto& [e, c] : shifted.terms())
        if (c.sign() < 0) return false;
    return true;
}

namespace {

std::vector<int> consumed_leading_indices(int m) {
    std::vector<int> qs;
    if (m % 3 == 2) {
        const int s = (m - 2) / 3;
        for (int l = 1; l <= s; ++l) qs.push_back(2 * l + 1);
    } else {
        const int s = m % 3 == 0 ? m / 3 : (m - 1) / 3;
        for (int q = s + 1; q <= 2 * s - 1; ++q) qs.push_back(q);
    }
    return qs;
}

} // namespace

Certificate nonexistence_certificate(int m, bool direct) {
    if (m < 5)
        throw usage_error(
            "nonexistence_certificate: degrees below 5 are classified explicitly");

    LeadingTable small(6);
    MultiPoly z1 = small.z(1);
    MultiPoly z2 = small.z(2);
    const auto value_at = [&](const MultiPoly& p) {
        return p.substitute("m", Rational(m)).constant_value();
    };

    Certificate cert;
    cert.m = m;
    cert.exists = false;
    switch (m % 3) {
        case 0:
            cert.checks = {{"z1", value_at(z1)},
                           {"z2", value_at(z2)},
                           {"z2+36z1", value_at(z2 + Rational(36) * z1)}};
            cert.witness_poly = "z2+36z1";
            break;
        case 1:
            cert.checks = {{"z1", value_at(z1)},
                           {"z2", value_at(z2)},
                           {"z2+144z1", value_at(z2 + Rational(144) * z1)}};
            cert.witness_poly = "z2+144z1";
            break;
        default:
            cert.checks = {{"z1", value_at(z1)}};
            cert.witness_poly = "z1";
            break;
    }
    for (const auto& [name, value] : cert.checks) {
        if (value.is_zero())
            throw error("nonexistence_certificate: designated polynomial " + name +
                        " vanished at m=" + std::to_string(m));
        if (name == cert.witness_poly) cert.witness_value = value;
    }

    if (direct) {
        LeadingTable table(m);
        bool any_nonzero = false;
        for (int q : consumed_leading_indices(m)) {
            MultiPoly y = leading_y(3 * q, m, table);
            Rational value = y.constant_value();  // throws if constants survive
            any_nonzero = any_nonzero || !value.is_zero();
            cert.direct_leading.emplace_back(3 * q, value);
        }
        if (!any_nonzero)
            throw error("nonexistence_certificate: no nonvanishing leading coefficient at m=" +
                        std::to_string(m));
    }
    return cert;
}

std::string Certificate::to_json(int indent) const {
    nlohmann::json j;
    j["m"] = m;
    j["verdict"] = exists ? "exists" : "not_exists";
    if (!exists) {
        j["witness"] = {{"poly", witness_poly}, {"value", witness_value.str()}};
        nlohmann::json checks_json = nlohmann::json::array();
        for (const auto& [name, value] : checks)
            checks_json.push_back({{"poly", name}, {"value", value.str()}});
        j["checks"] = std::move(checks_json);
        if (!direct_leading.empty()) {
            nlohmann::json direct_json = nlohmann::json::array();
            for (const auto& [k, value] : direct_leading)
                direct_json.push_back({{"k", k}, {"value", value.str()}});
            j["direct"] = std::move(direct_json);
        }
    }
    return j.dump(indent);
}

} // namespace hirota
