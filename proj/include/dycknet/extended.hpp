#pragma once

#include <optional>
#include <vector>

#include "dycknet/bigfloat.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Gate weight that may be +inf or -inf. Infinite weights are sanctioned only
// inside a GRU's U_z; the arithmetic below rejects every indeterminate form
// (inf - inf, inf * 0) instead of inventing a value for it.
class ExtendedWeight {
public:
    enum class Kind { Finite, PlusInf, MinusInf };

    static ExtendedWeight finite(BigFloat v) { return ExtendedWeight(Kind::Finite, std::move(v)); }
    static ExtendedWeight finite(const Rational& v, unsigned prec) {
        return finite(BigFloat::from_rational(v, prec));
    }
    static ExtendedWeight plus_inf() { return ExtendedWeight(Kind::PlusInf, std::nullopt); }
    static ExtendedWeight minus_inf() { return ExtendedWeight(Kind::MinusInf, std::nullopt); }

    Kind kind() const { return kind_; }
    bool is_infinite() const { return kind_ != Kind::Finite; }
    const BigFloat& finite_value() const {
        if (is_infinite()) throw PreconditionError("finite_value() on an infinite weight");
        return *v_;
    }

private:
    ExtendedWeight(Kind k, std::optional<BigFloat> v) : kind_(k), v_(std::move(v)) {}
    Kind kind_;
    std::optional<BigFloat> v_;
};

// Value of a dot product whose weights may be infinite.
struct ExtendedValue {
    enum class Kind { Finite, PlusInf, MinusInf };
    Kind kind;
    std::optional<BigFloat> value; // set iff finite
};

// sum_j row[j] * h[j] at precision `prec`. An infinite weight against an
// exactly-zero h component is a GateDegenerateError; opposing infinities are
// a hard error.
ExtendedValue extended_dot(const std::vector<ExtendedWeight>& row,
                           const std::vector<BigFloat>& h, unsigned prec);

// sigma of a possibly-infinite value: sigma(+inf) = 1 and sigma(-inf) = 0
// exactly.
BigFloat sigmoid_extended(const ExtendedValue& v, unsigned prec);

} // namespace dycknet
