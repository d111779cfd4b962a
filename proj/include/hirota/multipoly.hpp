#ifndef HIROTA_MULTIPOLY_HPP
#define HIROTA_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hirota/rational.hpp"

namespace hirota {

// Ordered table of distinct variable names. The order is fixed at
// construction and defines the positions of exponent vectors.
class VarTable {
public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }

    // -1 when the name is not in the table.
    int index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) >= 0; }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
// Union table: a's names in order, then b's names not already present.
VarTablePtr merge_vars(const VarTablePtr& a, const VarTablePtr& b);

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Rational. Canonical form: no stored
// term has a zero coefficient; terms are keyed by dense exponent vectors
// over the table and ordered lexicographically by the map.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() : vars_(make_vars({})) {}
    explicit MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(VarTablePtr vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(const Rational& c, VarTablePtr vars);
    static MultiPoly variable(const std::string& name, VarTablePtr vars);
    static MultiPoly monomial(const Rational& c, Exponents exps, VarTablePtr vars);

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Throws unless is_constant().
    Rational constant_value() const;

    // Adds c * x^exps, keeping canonical form.
    void add_term(const Exponents& exps, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(unsigned e) const;

    // Exact equality; operands over different tables are compared after
    // promotion to the union table.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Degree in one variable; -1 for the zero polynomial.
    int degree(const std::string& var) const;
    int total_degree() const;
    // True when the variable appears with a positive exponent somewhere.
    bool depends_on(const std::string& var) const;

    // Exact partial derivative. Unknown variable -> usage_error.
    MultiPoly derive(const std::string& var) const;
    // Antiderivative with zero constant of integration in `var`.
    MultiPoly integrate(const std::string& var) const;
    // Polynomial factor of var^power (remaining variables keep their
    // exponents; `var` appears with exponent zero in the result).
    MultiPoly coeff_of(const std::string& var, int power) const;

    MultiPoly substitute(const std::string& var, const Rational& value) const;
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;

    // Simultaneous renaming; names not in the map are kept. The renamed
    // table must still consist of distinct names.
    MultiPoly rename_vars(const std::map<std::string, std::string>& renames) const;

    // Re-expresses the polynomial over the given table, which must contain
    // every variable this polynomial depends on.
    MultiPoly with_vars(const VarTablePtr& vars) const;

private:
    int require_var(const std::string& var) const;

    VarTablePtr vars_;
    TermMap terms_;
};

// Promotes both operands to their union table.
std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b);

// g_t * h - g * h_t, the 2x2 partial Wronskian in `var` with the sign
// fixed so that wronskian_t(f_x, f, "t") = f_xt*f - f_x*f_t.
MultiPoly wronskian_t(const MultiPoly& g, const MultiPoly& h, const std::string& var);

} // namespace hirota

#endif
