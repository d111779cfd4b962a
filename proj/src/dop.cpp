#include "hirota/dop.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "hirota/error.hpp"

namespace hirota {

Rational alpha_pow(int p, int m) {
    if (p < 2) throw usage_error("alpha_pow: p must be >= 2");
    if (m < 0) throw usage_error("alpha_pow: exponent must be >= 0");
    return (m % p) % 2 == 0 ? Rational(1) : Rational(-1);
}

namespace {

void validate(const BilinearOpSpec& op) {
    if (op.p < 2) throw usage_error("bilinear operator: p must be >= 2");
    std::set<std::string> seen;
    for (const auto& [var, pow] : op.factors) {
        if (pow < 0) throw usage_error("bilinear operator: negative power");
        if (!seen.insert(var).second)
            throw usage_error("bilinear operator: repeated variable '" + var + "'");
    }
}

} // namespace

BilinearOpSpec BilinearOpSpec::parse(const std::string& text) {
    const auto fail = [&](const std::string& why) {
        throw error("operator parse: " + why + " in '" + text + "'");
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_nat = [&]() -> long {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected an integer");
        return std::stol(text.substr(start, i - start));
    };

    skip_ws();
    if (i >= text.size() || text[i] != 'D') fail("expected 'D'");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    BilinearOpSpec op;
    long p = read_nat();
    if (p < 2) fail("p must be >= 2");
    op.p = static_cast<int>(p);
    skip_ws();
    if (i >= text.size() || text[i] != ';') fail("expected ';'");
    ++i;
    while (true) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_'))
            ++i;
        if (i == start) fail("expected a variable name");
        std::string var = text.substr(start, i - start);
        skip_ws();
        if (i >= text.size() || text[i] != '^') fail("expected '^pow'");
        ++i;
        long pow = read_nat();
        op.factors.emplace_back(std::move(var), static_cast<int>(pow));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ')') fail("expected ')'");
    ++i;
    skip_ws();
    if (i != text.size()) fail("trailing input");
    validate(op);
    return op;
}

std::string BilinearOpSpec::str() const {
    std::ostringstream os;
    os << "D(" << p << ";";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << ",";
        os << factors[i].first << "^" << factors[i].second;
    }
    os << ")";
    return os.str();
}

MultiPoly apply(const BilinearOpSpec& op, const MultiPoly& f, const MultiPoly& g) {
    validate(op);
    auto [a, b] = aligned(f, g);
    for (const auto& [var, pow] : op.factors)
        if (a.vars()->index_of(var) < 0)
            throw usage_error("bilinear operator: variable '" + var +
                              "' not present in the operands");

    const std::size_t k = op.factors.size();
    MultiPoly result = MultiPoly::zero(a.vars());
    std::vector<int> j(k, 0);

    // Walk the multi-index lattice 0 <= j_i <= n_i, carrying the partial
    // derivatives of f (orders n_i - j_i) and g (orders j_i) per level.
    auto recurse = [&](auto&& self, std::size_t level, const MultiPoly& df,
                       const MultiPoly& dg, const Rational& binom, int alpha_exp) -> void {
        if (level == k) {
            result += binom * alpha_pow(op.p, alpha_exp) * (df * dg);
            return;
        }
        const auto& [var, n] = op.factors[level];
        std::vector<MultiPoly> ladder;
        ladder.reserve(static_cast<std::size_t>(n) + 1);
        ladder.push_back(df);
        for (int i = 0; i < n; ++i) ladder.push_back(ladder.back().derive(var));
        MultiPoly g_j = dg;
        for (int jj = 0; jj <= n; ++jj) {
            self(self, level + 1, ladder[static_cast<std::size_t>(n - jj)], g_j,
                 binom * Rational::binomial(static_cast<unsigned>(n),
                                            static_cast<unsigned>(jj)),
                 alpha_exp + jj);
            if (jj < n) g_j = g_j.derive(var);
        }
    };
    recurse(recurse, 0, a, b, Rational(1), 0);
    return result;
}

} // namespace hirota
