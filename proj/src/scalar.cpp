#include "dycknet/scalar.hpp"

#include "dycknet/elementary.hpp"

namespace dycknet {

namespace {

[[noreturn]] void inexact(const char* fn) {
    throw DomainError(std::string(fn) +
                      " has no exact rational value at this argument; evaluate in the big-float regime");
}

} // namespace

std::string scalar_str(const Scalar& s) {
    if (const auto* q = std::get_if<Rational>(&s)) return q->str();
    if (const auto* b = std::get_if<BigFloat>(&s)) return b->decimal_str();
    return std::get<FixedPoint>(s).to_rational().str();
}

Scalar scalar_sigmoid(const Scalar& s) {
    if (const auto* q = std::get_if<Rational>(&s)) {
        if (q->is_zero()) return Rational(1, 2);
        inexact("sigmoid");
    }
    if (const auto* b = std::get_if<BigFloat>(&s)) return sigmoid(*b);
    inexact("sigmoid");
}

Scalar scalar_sigmoid_inv(const Scalar& s) {
    if (const auto* q = std::get_if<Rational>(&s)) {
        if (q->sign() <= 0 || *q >= Rational(1))
            throw DomainError("sigmoid_inv requires 0 < y < 1");
        if (*q == Rational(1, 2)) return Rational(0);
        inexact("sigmoid_inv");
    }
    if (const auto* b = std::get_if<BigFloat>(&s)) return sigmoid_inv(*b);
    inexact("sigmoid_inv");
}

Scalar scalar_tanh(const Scalar& s) {
    if (const auto* q = std::get_if<Rational>(&s)) {
        if (q->is_zero()) return Rational(0);
        inexact("tanh");
    }
    if (const auto* b = std::get_if<BigFloat>(&s)) return tanh_fn(*b);
    inexact("tanh");
}

Scalar scalar_tanh_inv(const Scalar& s) {
    if (const auto* q = std::get_if<Rational>(&s)) {
        if (abs_value(*q) >= Rational(1))
            throw DomainError("tanh_inv requires |y| < 1");
        if (q->is_zero()) return Rational(0);
        inexact("tanh_inv");
    }
    if (const auto* b = std::get_if<BigFloat>(&s)) return tanh_inv(*b);
    inexact("tanh_inv");
}

} // namespace dycknet
