#pragma once

#include <vector>

#include "dycknet/bigfloat.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Predetermined set S of accepted final outputs; membership is O(1). Interval
// bounds and finite-set members are exact rationals, so BigFloat membership
// tests are exact comparisons, not tolerance checks.
class AcceptanceSet {
public:
    enum class Kind { ExactZero, OpenInterval, FiniteSet };

    static AcceptanceSet exact_zero();
    static AcceptanceSet open_interval(Rational lo, Rational hi);
    static AcceptanceSet finite_set(std::vector<Rational> values);

    Kind kind() const { return kind_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    const std::vector<Rational>& values() const { return values_; }

    bool contains(const Rational& v) const;
    bool contains(const BigFloat& v) const;

private:
    AcceptanceSet() = default;
    Kind kind_ = Kind::ExactZero;
    Rational lo_, hi_;
    std::vector<Rational> values_;
};

} // namespace dycknet
