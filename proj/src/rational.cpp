#include "hirota/rational.hpp"

#include <cctype>
#include <ostream>

#include "hirota/error.hpp"

namespace hirota {

Rational::Rational(long n, long d) {
    if (d == 0) throw error("rational: zero denominator");
    v_ = mpq_class(n, d);
    canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw error("rational: empty literal");
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') pos = 1;
    bool saw_digit = false, saw_slash = false;
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            saw_digit = true;
        } else if (s[i] == '/' && !saw_slash && saw_digit && i + 1 < s.size()) {
            saw_slash = true;
            saw_digit = false;
        } else {
            throw error("rational: malformed literal '" + s + "'");
        }
    }
    if (!saw_digit) throw error("rational: malformed literal '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw error("rational: malformed literal '" + s + "'");
    if (q.get_den() == 0) throw error("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

Rational Rational::factorial(unsigned n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Rational(mpq_class(z));
}

Rational Rational::binomial(unsigned n, unsigned k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return Rational(mpq_class(z));
}

Rational Rational::pow(unsigned e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw error("rational: " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace hirota
