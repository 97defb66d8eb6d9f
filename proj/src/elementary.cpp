#include "dycknet/elementary.hpp"

namespace dycknet {

namespace {

constexpr unsigned kGuardBits = 32;

// Scratch value at guard precision holding a copy of x.
BigFloat widen(const BigFloat& x) {
    return x.round_to(x.precision() + kGuardBits); // exact: precision only grows
}

} // namespace

BigFloat exp_fn(const BigFloat& x) {
    BigFloat w = widen(x);
    mpfr_exp(w.raw(), w.raw(), MPFR_RNDN);
    return w.round_to(x.precision());
}

BigFloat log_fn(const BigFloat& x) {
    if (x.sign() <= 0) throw DomainError("log of non-positive value");
    BigFloat w = widen(x);
    mpfr_log(w.raw(), w.raw(), MPFR_RNDN);
    return w.round_to(x.precision());
}

BigFloat sigmoid(const BigFloat& x) {
    const unsigned p = x.precision();
    BigFloat w = widen(x);
    mpfr_neg(w.raw(), w.raw(), MPFR_RNDN);
    mpfr_exp(w.raw(), w.raw(), MPFR_RNDN);      // e^-x
    mpfr_add_ui(w.raw(), w.raw(), 1, MPFR_RNDN); // 1 + e^-x
    mpfr_ui_div(w.raw(), 1, w.raw(), MPFR_RNDN);
    return w.round_to(p);
}

BigFloat sigmoid_inv(const BigFloat& y) {
    if (y.sign() <= 0 || y.cmp(Rational(1)) >= 0)
        throw DomainError("sigmoid_inv requires 0 < y < 1");
    const unsigned p = y.precision();
    const unsigned pw = p + kGuardBits;
    if (y.cmp(Rational(1, 4)) >= 0 && y.cmp(Rational(3, 4)) <= 0) {
        // 2y - 1 is exact here (Sterbenz), so atanh sees an unperturbed
        // argument and small results keep full relative accuracy.
        BigFloat w = y.round_to(pw);
        mpfr_mul_2ui(w.raw(), w.raw(), 1, MPFR_RNDN);
        mpfr_sub_ui(w.raw(), w.raw(), 1, MPFR_RNDN);
        mpfr_atanh(w.raw(), w.raw(), MPFR_RNDN);
        mpfr_mul_2ui(w.raw(), w.raw(), 1, MPFR_RNDN);
        return w.round_to(p);
    }
    // ln((1 - y) / y); 1 - y carries no cancellation for y outside [1/4, 3/4].
    BigFloat num(pw);
    mpfr_ui_sub(num.raw(), 1, y.raw(), MPFR_RNDN);
    BigFloat w(pw);
    mpfr_div(w.raw(), num.raw(), y.raw(), MPFR_RNDN);
    mpfr_log(w.raw(), w.raw(), MPFR_RNDN);
    mpfr_neg(w.raw(), w.raw(), MPFR_RNDN);
    return w.round_to(p);
}

BigFloat tanh_fn(const BigFloat& x) {
    BigFloat w = widen(x);
    mpfr_tanh(w.raw(), w.raw(), MPFR_RNDN);
    return w.round_to(x.precision());
}

BigFloat tanh_inv(const BigFloat& y) {
    if (y.cmp(Rational(-1)) <= 0 || y.cmp(Rational(1)) >= 0)
        throw DomainError("tanh_inv requires |y| < 1");
    BigFloat w = widen(y);
    mpfr_atanh(w.raw(), w.raw(), MPFR_RNDN);
    return w.round_to(y.precision());
}

BigFloat sigmoid_q(const Rational& x, unsigned prec) {
    return sigmoid(BigFloat::from_rational(x, prec + kGuardBits)).round_to(prec);
}

BigFloat sigmoid_inv_q(const Rational& y, unsigned prec) {
    if (y.sign() <= 0 || y >= Rational(1))
        throw DomainError("sigmoid_inv requires 0 < y < 1");
    return sigmoid_inv(BigFloat::from_rational(y, prec + kGuardBits)).round_to(prec);
}

BigFloat tanh_q(const Rational& x, unsigned prec) {
    return tanh_fn(BigFloat::from_rational(x, prec + kGuardBits)).round_to(prec);
}

BigFloat tanh_inv_q(const Rational& y, unsigned prec) {
    if (abs_value(y) >= Rational(1))
        throw DomainError("tanh_inv requires |y| < 1");
    return tanh_inv(BigFloat::from_rational(y, prec + kGuardBits)).round_to(prec);
}

} // namespace dycknet
