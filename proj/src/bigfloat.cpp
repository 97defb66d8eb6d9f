#include "dycknet/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace dycknet {

namespace {

unsigned checked_prec(unsigned p) {
    if (p < MPFR_PREC_MIN) throw DomainError("precision below MPFR minimum");
    if (p > 1u << 24) throw DomainError("precision unreasonably large");
    return p;
}

} // namespace

BigFloat::BigFloat(unsigned precision_bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(checked_prec(precision_bits)));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::from_long(long v, unsigned prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, unsigned prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_decimal(const std::string& s, unsigned prec) {
    if (s.empty()) throw ParseError("empty decimal literal");
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("bad decimal literal: '" + s + "'");
    // mpfr accepts "inf"/"nan" spellings; only finite values live here.
    if (mpfr_number_p(r.v_) == 0)
        throw ParseError("non-finite decimal literal: '" + s + "'");
    return r;
}

unsigned BigFloat::precision() const {
    return static_cast<unsigned>(mpfr_get_prec(v_));
}

BigFloat BigFloat::round_to(unsigned prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Rational BigFloat::to_rational() const {
    if (is_zero()) return Rational(0);
    mpz_class m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class q(m);
    if (e >= 0) {
        mpq_class scale;
        mpz_ui_pow_ui(scale.get_num().get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= scale;
    } else {
        mpq_class scale(1);
        mpz_ui_pow_ui(scale.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-e));
        scale.canonicalize();
        q *= scale;
    }
    q.canonicalize();
    return Rational(std::move(q));
}

namespace {

// Compose a decimal literal from mpfr digits (value = 0.digits * 10^exp),
// plain when the magnitude is readable, scientific otherwise.
std::string compose_decimal(const std::string& signed_digits, long exp) {
    const bool neg = !signed_digits.empty() && signed_digits[0] == '-';
    std::string digits = neg ? signed_digits.substr(1) : signed_digits;
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string body;
    if (exp > -4 && exp <= 12) {
        if (exp <= 0) {
            body = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
        } else if (static_cast<std::size_t>(exp) >= digits.size()) {
            body = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
        } else {
            body = digits.substr(0, static_cast<std::size_t>(exp)) + "." +
                   digits.substr(static_cast<std::size_t>(exp));
        }
    } else {
        body = digits.substr(0, 1);
        if (digits.size() > 1) body += "." + digits.substr(1);
        body += "e" + std::to_string(exp - 1);
    }
    return neg ? "-" + body : body;
}

} // namespace

std::string BigFloat::decimal_str() const {
    if (is_zero()) return "0";
    const unsigned p = precision();

    const auto attempt = [&](std::size_t digits) {
        mpfr_exp_t exp = 0;
        char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
        if (raw == nullptr) throw Error("mpfr_get_str failed");
        std::string s(raw);
        mpfr_free_str(raw);
        return compose_decimal(s, static_cast<long>(exp));
    };
    const auto round_trips = [&](const std::string& s) {
        BigFloat back(p);
        mpfr_set_str(back.v_, s.c_str(), 10, MPFR_RNDN);
        return mpfr_equal_p(back.v_, v_) != 0;
    };

    // Shortest digit count whose parse recovers the value exactly; round
    // trips are monotone in the digit count, so binary search applies.
    const std::size_t dmax =
        static_cast<std::size_t>(static_cast<double>(p) * 0.30103) + 3;
    std::size_t lo = 2, hi = dmax;
    std::string best = attempt(dmax);
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const std::string cand = attempt(mid);
        if (round_trips(cand)) {
            hi = mid;
            best = cand;
        } else {
            lo = mid + 1;
        }
    }
    return best;
}

std::string BigFloat::sci_str(int sig_figs) const {
    if (sig_figs < 1) throw DomainError("sig_figs must be positive");
    char* buf = nullptr;
    const int rc = mpfr_asprintf(&buf, "%.*Re", sig_figs - 1, v_);
    if (rc < 0 || buf == nullptr) throw Error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DivisionByZeroError("big-float division by zero");
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_2exp(const BigFloat& x, long e) {
    BigFloat r(x.precision());
    if (e >= 0) {
        mpfr_mul_2ui(r.v_, x.v_, static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
        mpfr_div_2ui(r.v_, x.v_, static_cast<unsigned long>(-e), MPFR_RNDN);
    }
    return r;
}

BigFloat abs_value(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

int cmp_abs(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmpabs(a.raw(), b.raw());
}

} // namespace dycknet
