#include "dycknet/fixed_point.hpp"

namespace dycknet {

namespace {

void check_format(FixedPointFormat fmt) {
    if (fmt.int_bits == 0) throw DomainError("fixed-point format needs at least the sign bit");
    if (fmt.int_bits + fmt.frac_bits > 4096) throw DomainError("fixed-point format too wide");
}

// Nearest integer to num/den with ties to even; den > 0.
mpz_class round_nearest_even(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const mpz_class twice = 2 * r;
    const int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    return q;
}

} // namespace

FixedPoint FixedPoint::quantize(const Rational& x, FixedPointFormat fmt) {
    check_format(fmt);
    mpz_class scaled_num = x.numerator();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), fmt.frac_bits);
    mpz_class v = round_nearest_even(scaled_num, x.denominator());

    mpz_class bound(1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), fmt.int_bits + fmt.frac_bits - 1);
    if (v >= bound) v = bound - 1;
    if (v < -bound) v = -bound;
    return FixedPoint(fmt, std::move(v));
}

FixedPoint FixedPoint::quantize(const BigFloat& x, FixedPointFormat fmt) {
    return quantize(x.to_rational(), fmt);
}

Rational FixedPoint::to_rational() const {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), fmt_.frac_bits);
    mpq_class q(stored_, den);
    q.canonicalize();
    return Rational(std::move(q));
}

} // namespace dycknet
