#include "dycknet/rational.hpp"

namespace dycknet {

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
    if (sgn(v.get_den()) == 0) throw DivisionByZeroError("rational literal with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base.is_zero() && e < 0) throw DomainError("0 raised to a negative power");
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
    mpq_class r;
    if (e > 0) {
        r = mpq_class(num) / mpq_class(den);
    } else {
        r = mpq_class(den) / mpq_class(num);
    }
    r.canonicalize();
    return Rational(std::move(r));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational abs_value(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

int cmp_abs(const Rational& a, const Rational& b) {
    const Rational x = abs_value(a);
    const Rational y = abs_value(b);
    if (x < y) return -1;
    if (y < x) return 1;
    return 0;
}

} // namespace dycknet
