#pragma once

#include <string>
#include <variant>

#include "dycknet/bigfloat.hpp"
#include "dycknet/fixed_point.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Tagged numeric value spanning the three regimes. The exact-rational regime
// admits no rounding, so transcendental functions on a Rational payload are
// defined only at arguments with exact results; anything else is a
// DomainError directing the caller to BigFloat.
using Scalar = std::variant<Rational, BigFloat, FixedPoint>;

std::string scalar_str(const Scalar& s);

Scalar scalar_sigmoid(const Scalar& s);
Scalar scalar_sigmoid_inv(const Scalar& s);
Scalar scalar_tanh(const Scalar& s);
Scalar scalar_tanh_inv(const Scalar& s);

} // namespace dycknet
