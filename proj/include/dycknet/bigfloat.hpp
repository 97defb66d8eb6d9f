#pragma once

#include <mpfr.h>

#include <string>

#include "dycknet/errors.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Binary floating-point value with an explicit mantissa precision, carried
// with the value. Every operation rounds to nearest; the result precision of
// a binary operation is the larger of the operand precisions, so precision is
// never silently lost.
class BigFloat {
public:
    explicit BigFloat(unsigned precision_bits);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_long(long v, unsigned prec);
    static BigFloat from_rational(const Rational& q, unsigned prec);
    // Decimal literal, optionally in scientific notation (ParseError otherwise).
    static BigFloat from_decimal(const std::string& s, unsigned prec);

    unsigned precision() const;
    BigFloat round_to(unsigned prec) const;

    // Exact: every finite binary float is a rational m * 2^e.
    Rational to_rational() const;

    // Decimal string with enough digits that reading it back at the same
    // precision recovers the value exactly.
    std::string decimal_str() const;
    // Scientific notation with the given number of significant figures.
    std::string sci_str(int sig_figs) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    // Exact value comparisons, precision-independent.
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.raw().get_mpq_t()); }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    // x * 2^e, exact.
    static BigFloat mul_2exp(const BigFloat& x, long e);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

BigFloat abs_value(const BigFloat& a);

inline BigFloat zero_like(const BigFloat& x) { return BigFloat(x.precision()); }
inline BigFloat one_like(const BigFloat& x) { return BigFloat::from_long(1, x.precision()); }
int cmp_abs(const BigFloat& a, const BigFloat& b);

} // namespace dycknet
