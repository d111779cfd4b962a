#include "hirota/multipoly.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hirota/error.hpp"

namespace hirota {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw usage_error("vartable: empty variable name");
        if (!seen.insert(n).second)
            throw usage_error("vartable: duplicate variable '" + n + "'");
    }
}

int VarTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

VarTablePtr merge_vars(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b || *a == *b) return a;
    std::vector<std::string> names = a->names();
    for (const auto& n : b->names())
        if (a->index_of(n) < 0) names.push_back(n);
    return make_vars(std::move(names));
}

MultiPoly MultiPoly::constant(const Rational& c, VarTablePtr vars) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name, VarTablePtr vars) {
    MultiPoly p(std::move(vars));
    int idx = p.vars_->index_of(name);
    if (idx < 0) throw usage_error("multipoly: unknown variable '" + name + "'");
    Exponents e(p.vars_->size(), 0);
    e[static_cast<std::size_t>(idx)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents exps, VarTablePtr vars) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_->size())
        throw usage_error("multipoly: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw usage_error("multipoly: negative exponent");
    p.add_term(exps, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw usage_error("multipoly: not a constant polynomial");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::with_vars(const VarTablePtr& vars) const {
    if (vars == vars_ || *vars == *vars_) {
        MultiPoly r(vars);
        r.terms_ = terms_;
        return r;
    }
    std::vector<int> where(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        where[i] = vars->index_of(vars_->name(i));
    }
    MultiPoly r(vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw usage_error("multipoly: target table lacks variable '" +
                                  vars_->name(i) + "'");
            ne[static_cast<std::size_t>(where[i])] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() == b.vars() || *a.vars() == *b.vars()) return {a, b};
    VarTablePtr u = merge_vars(a.vars(), b.vars());
    return {a.with_vars(u), b.with_vars(u)};
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ == o.vars_ || *vars_ == *o.vars_) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    auto [a, b] = aligned(*this, o);
    a += b;
    return *this = std::move(a);
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ == o.vars_ || *vars_ == *o.vars_) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    auto [a, b] = aligned(*this, o);
    a -= b;
    return *this = std::move(a);
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    if (!(vars_ == o.vars_ || *vars_ == *o.vars_)) {
        auto [a, b] = aligned(*this, o);
        a *= b;
        return *this = std::move(a);
    }
    MultiPoly r(vars_);
    Exponents e(vars_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return *this = std::move(r);
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = MultiPoly::constant(Rational(1), vars_);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.terms_ == b.terms_;
    auto [pa, pb] = aligned(a, b);
    return pa.terms_ == pb.terms_;
}

int MultiPoly::require_var(const std::string& var) const {
    int idx = vars_->index_of(var);
    if (idx < 0) throw usage_error("multipoly: unknown variable '" + var + "'");
    return idx;
}

int MultiPoly::degree(const std::string& var) const {
    std::size_t idx = static_cast<std::size_t>(require_var(var));
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::depends_on(const std::string& var) const {
    int idx = vars_->index_of(var);
    if (idx < 0) return false;
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(idx)] > 0) return true;
    return false;
}

MultiPoly MultiPoly::derive(const std::string& var) const {
    std::size_t idx = static_cast<std::size_t>(require_var(var));
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        r.add_term(ne, c * Rational(e[idx]));
    }
    return r;
}

MultiPoly MultiPoly::integrate(const std::string& var) const {
    std::size_t idx = static_cast<std::size_t>(require_var(var));
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[idx] += 1;
        r.add_term(ne, c / Rational(ne[idx]));
    }
    return r;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, int power) const {
    std::size_t idx = static_cast<std::size_t>(require_var(var));
    if (power < 0) throw usage_error("multipoly: negative power");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] != power) continue;
        Exponents ne = e;
        ne[idx] = 0;
        r.add_term(ne, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const Rational& value) const {
    std::size_t idx = static_cast<std::size_t>(require_var(var));
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[idx] = 0;
        r.add_term(ne, c * value.pow(static_cast<unsigned>(e[idx])));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    std::size_t idx = static_cast<std::size_t>(require_var(var));
    VarTablePtr table = merge_vars(vars_, value.vars());
    MultiPoly val = value.with_vars(table);

    // Group by power of `var`, then Horner-style powers of the value.
    std::map<int, MultiPoly> by_power;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[idx] = 0;
        auto it = by_power.find(e[idx]);
        if (it == by_power.end())
            it = by_power.emplace(e[idx], MultiPoly(vars_)).first;
        it->second.add_term(ne, c);
    }
    MultiPoly result(table);
    MultiPoly vpow = MultiPoly::constant(Rational(1), table);
    int cur = 0;
    for (const auto& [p, coeff] : by_power) {
        while (cur < p) {
            vpow *= val;
            ++cur;
        }
        result += coeff.with_vars(table) * vpow;
    }
    return result;
}

MultiPoly MultiPoly::rename_vars(const std::map<std::string, std::string>& renames) const {
    std::vector<std::string> names = vars_->names();
    for (auto& n : names) {
        auto it = renames.find(n);
        if (it != renames.end()) n = it->second;
    }
    MultiPoly r(make_vars(std::move(names)));  // validates distinctness
    r.terms_ = terms_;
    return r;
}

MultiPoly wronskian_t(const MultiPoly& g, const MultiPoly& h, const std::string& var) {
    auto [a, b] = aligned(g, h);
    return a.derive(var) * b - a * b.derive(var);
}

} // namespace hirota
