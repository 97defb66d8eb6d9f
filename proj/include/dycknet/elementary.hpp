#pragma once

#include "dycknet/bigfloat.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Elementary functions on BigFloat. Each result is returned at the argument's
// precision p with relative error below 2^(1-p): the computation runs at
// p + 32 guard bits and is rounded once at the end. sigmoid_inv avoids the
// cancellation in -ln(y^-1 - 1) near y = 1/2 by switching to 2*atanh(2y - 1),
// where 2y - 1 is exact.

BigFloat exp_fn(const BigFloat& x);
BigFloat log_fn(const BigFloat& x); // DomainError for x <= 0

BigFloat sigmoid(const BigFloat& x);
BigFloat sigmoid_inv(const BigFloat& y); // DomainError unless 0 < y < 1
BigFloat tanh_fn(const BigFloat& x);
BigFloat tanh_inv(const BigFloat& y); // DomainError unless |y| < 1

// Evaluate at precision `prec` from an exact rational argument. Domain checks
// are exact.
BigFloat sigmoid_q(const Rational& x, unsigned prec);
BigFloat sigmoid_inv_q(const Rational& y, unsigned prec);
BigFloat tanh_q(const Rational& x, unsigned prec);
BigFloat tanh_inv_q(const Rational& y, unsigned prec);

} // namespace dycknet
