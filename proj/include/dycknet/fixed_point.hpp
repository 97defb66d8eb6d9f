#pragma once

#include <gmpxx.h>

#include <string>

#include "dycknet/bigfloat.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Two's-complement fixed point: int_bits total integer bits including the
// sign, frac_bits fractional bits. Stored values range over
// [-2^(int_bits+frac_bits-1), 2^(int_bits+frac_bits-1) - 1] in units of
// 2^-frac_bits.
struct FixedPointFormat {
    unsigned int_bits;
    unsigned frac_bits;

    friend bool operator==(const FixedPointFormat&, const FixedPointFormat&) = default;
};

class FixedPoint {
public:
    // Round-to-nearest-even of x * 2^frac_bits, saturating at the
    // representable bounds. Deterministic; idempotent on representable values.
    static FixedPoint quantize(const Rational& x, FixedPointFormat fmt);
    static FixedPoint quantize(const BigFloat& x, FixedPointFormat fmt);

    Rational to_rational() const;
    const mpz_class& stored() const { return stored_; }
    const FixedPointFormat& format() const { return fmt_; }

    friend bool operator==(const FixedPoint& a, const FixedPoint& b) {
        return a.fmt_ == b.fmt_ && a.stored_ == b.stored_;
    }

private:
    FixedPoint(FixedPointFormat fmt, mpz_class stored)
        : fmt_(fmt), stored_(std::move(stored)) {}
    FixedPointFormat fmt_;
    mpz_class stored_;
};

} // namespace dycknet
