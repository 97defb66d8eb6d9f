#include "dycknet/extended.hpp"

#include "dycknet/elementary.hpp"

namespace dycknet {

ExtendedValue extended_dot(const std::vector<ExtendedWeight>& row,
                           const std::vector<BigFloat>& h, unsigned prec) {
    if (row.size() != h.size()) throw DimensionError("extended_dot size mismatch");
    int inf_sign = 0; // 0 none, +1, -1
    BigFloat finite(prec);
    for (std::size_t j = 0; j < row.size(); ++j) {
        const ExtendedWeight& w = row[j];
        if (w.is_infinite()) {
            const int hs = h[j].sign();
            if (hs == 0)
                throw GateDegenerateError("infinite gate weight applied to an exactly-zero hidden component");
            const int s = (w.kind() == ExtendedWeight::Kind::PlusInf ? 1 : -1) * hs;
            if (inf_sign != 0 && inf_sign != s)
                throw Error("indeterminate sum of opposing infinite gate terms");
            inf_sign = s;
        } else {
            finite = finite + w.finite_value() * h[j];
        }
    }
    if (inf_sign > 0) return {ExtendedValue::Kind::PlusInf, std::nullopt};
    if (inf_sign < 0) return {ExtendedValue::Kind::MinusInf, std::nullopt};
    return {ExtendedValue::Kind::Finite, finite.round_to(prec)};
}

BigFloat sigmoid_extended(const ExtendedValue& v, unsigned prec) {
    switch (v.kind) {
    case ExtendedValue::Kind::PlusInf:
        return BigFloat::from_long(1, prec);
    case ExtendedValue::Kind::MinusInf:
        return BigFloat::from_long(0, prec);
    case ExtendedValue::Kind::Finite:
        return sigmoid(v.value->round_to(prec));
    }
    throw Error("unreachable");
}

} // namespace dycknet
