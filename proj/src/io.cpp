#include "hirota/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hirota/error.hpp"

namespace hirota {

using nlohmann::json;

std::string to_json(const MultiPoly& p, int indent) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["coeff"] = c.str();
        term["exps"] = e;
        terms.push_back(std::move(term));
    }
    json out;
    out["vars"] = p.vars()->names();
    out["terms"] = std::move(terms);
    return out.dump(indent);
}

MultiPoly from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw error(std::string("polynomial json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw error("polynomial json: expected object with 'vars' and 'terms'");
    if (!j["vars"].is_array())
        throw error("polynomial json: 'vars' must be an array of strings");
    std::vector<std::string> names;
    for (const auto& v : j["vars"]) {
        if (!v.is_string())
            throw error("polynomial json: 'vars' must be an array of strings");
        names.push_back(v.get<std::string>());
    }
    VarTablePtr table;
    try {
        table = make_vars(std::move(names));
    } catch (const usage_error& e) {
        throw error(std::string("polynomial json: ") + e.what());
    }
    MultiPoly p(table);
    if (!j["terms"].is_array())
        throw error("polynomial json: 'terms' must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") ||
            !t["coeff"].is_string() || !t["exps"].is_array())
            throw error("polynomial json: each term needs 'coeff' and 'exps'");
        Exponents e;
        for (const auto& x : t["exps"]) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw error("polynomial json: exponents must be nonnegative integers");
            e.push_back(static_cast<int>(x.get<long long>()));
        }
        if (e.size() != table->size())
            throw error("polynomial json: exponent vector length mismatch");
        p.add_term(e, Rational::parse(t["coeff"].get<std::string>()));
    }
    return p;
}

namespace {

struct RenderTerm {
    Exponents exps;
    Rational coeff;
};

// Descending exponent order puts high powers of the first variable first.
std::vector<RenderTerm> render_order(const MultiPoly& p) {
    std::vector<RenderTerm> terms;
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
    std::reverse(terms.begin(), terms.end());
    return terms;
}

void append_text_monomial(std::ostream& os, const VarTable& vars, const Exponents& e,
                          const Rational& coeff_abs) {
    bool lead = true;
    if (!coeff_abs.is_one()) {
        os << coeff_abs.str();
        lead = false;
    }
    bool any_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        any_var = true;
        if (!lead) os << "*";
        os << vars.name(i);
        if (e[i] > 1) os << "^" << e[i];
        lead = false;
    }
    if (!any_var && coeff_abs.is_one()) os << "1";
}

std::string latex_name(const std::string& name) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    if (i == 0 || i == name.size()) return name;
    return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

void append_latex_coeff(std::ostream& os, const Rational& coeff_abs, bool has_vars) {
    if (coeff_abs.is_one() && has_vars) return;
    if (coeff_abs.is_integer()) {
        os << coeff_abs.str();
    } else {
        os << "\\frac{" << coeff_abs.numerator_str() << "}{" << coeff_abs.denominator_str()
           << "}";
    }
}

} // namespace

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : render_order(p)) {
        Rational a = t.coeff;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else if (a.sign() < 0) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
        append_text_monomial(os, *p.vars(), t.exps, a);
    }
    return os.str();
}

std::string to_latex(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : render_order(p)) {
        Rational a = t.coeff;
        if (a.sign() < 0) {
            os << "-";
            a = -a;
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool has_vars = false;
        for (int e : t.exps)
            if (e > 0) has_vars = true;
        append_latex_coeff(os, a, has_vars);
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            os << latex_name(p.vars()->name(i));
            if (t.exps[i] > 1) os << "^{" << t.exps[i] << "}";
        }
    }
    return os.str();
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            cur_ = {Tok::End, ""};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // Rational literal "a/b".
            if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
            cur_ = {Tok::Number, s_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            cur_ = {Tok::Ident, s_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': cur_ = {Tok::Plus, "+"}; return;
            case '-': cur_ = {Tok::Minus, "-"}; return;
            case '*': cur_ = {Tok::Star, "*"}; return;
            case '^': cur_ = {Tok::Caret, "^"}; return;
            case '(': cur_ = {Tok::LParen, "("}; return;
            case ')': cur_ = {Tok::RParen, ")"}; return;
            default: throw error(std::string("polynomial parse: unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token cur_;
};

class Parser {
public:
    Parser(const std::string& text, VarTablePtr vars)
        : lex_(text), vars_(std::move(vars)) {}

    MultiPoly run() {
        MultiPoly p = expr();
        if (lex_.peek().kind != Tok::End)
            throw error("polynomial parse: trailing input at '" + lex_.peek().text + "'");
        return p;
    }

private:
    MultiPoly expr() {
        bool neg = false;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            if (lex_.take().kind == Tok::Minus) neg = !neg;
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            MultiPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc *= factor();
        }
        return acc;
    }

    MultiPoly factor() {
        bool neg = false;
        while (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = !neg;
        }
        MultiPoly base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
                throw error("polynomial parse: exponent must be a nonnegative integer");
            base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
        }
        return neg ? -base : base;
    }

    MultiPoly atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return MultiPoly::constant(Rational::parse(t.text), vars_);
            case Tok::Ident: {
                if (vars_->index_of(t.text) < 0)
                    throw error("polynomial parse: unknown variable '" + t.text + "'");
                return MultiPoly::variable(t.text, vars_);
            }
            case Tok::LParen: {
                MultiPoly p = expr();
                if (lex_.take().kind != Tok::RParen)
                    throw error("polynomial parse: missing ')'");
                return p;
            }
            default:
                throw error("polynomial parse: unexpected token '" + t.text + "'");
        }
    }

    Lexer lex_;
    VarTablePtr vars_;
};

std::vector<std::string> collect_idents(const std::string& text) {
    std::vector<std::string> names;
    Lexer lex(text);
    while (lex.peek().kind != Tok::End) {
        Token t = lex.take();
        if (t.kind == Tok::Ident &&
            std::find(names.begin(), names.end(), t.text) == names.end())
            names.push_back(t.text);
    }
    return names;
}

} // namespace

MultiPoly parse_poly(const std::string& text, const VarTablePtr& vars) {
    return Parser(text, vars).run();
}

MultiPoly parse_poly(const std::string& text) {
    return parse_poly(text, make_vars(collect_idents(text)));
}

} // namespace hirota
