#pragma once

#include <optional>

#include "dycknet/acceptance.hpp"
#include "dycknet/alphabet.hpp"
#include "dycknet/dfa.hpp"
#include "dycknet/fixed_point.hpp"
#include "dycknet/matrix.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

// Simple recurrent network with ReLU activation over exact rationals:
//   h_t = relu(W_x x_t + W_h h_{t-1} + b_h),  o_t = W_o h_t + b_o.
// Inputs are one-hots in the alphabet order.
struct SimpleRnn {
    Alphabet alphabet;
    Matrix<Rational> Wx;  // m x |alphabet|
    Matrix<Rational> Wh;  // m x m
    std::vector<Rational> bh;
    Matrix<Rational> Wo;  // 1 x m
    Rational bo;
    std::vector<Rational> h0;

    std::size_t hidden_size() const { return h0.size(); }
    void validate() const;
};

std::vector<Rational> rnn_step(const SimpleRnn& rnn, const std::vector<Rational>& h, int sym);

struct RnnTraceStep {
    int t;
    int sym; // -1 at t = 0
    std::vector<Rational> h;
    Rational o;
};

struct RnnRunResult {
    Rational output;                  // o at the final step (o_0 for the empty word)
    std::vector<RnnTraceStep> trace;  // length |word| + 1
};

RnnRunResult rnn_run(const SimpleRnn& rnn, const Word& word);
bool rnn_accepts(const SimpleRnn& rnn, const AcceptanceSet& s, const Word& word);

// Finite-precision regime: the stored hidden state is quantized after each
// step (and at t = 0); the step accumulator itself is exact.
std::vector<FixedPoint> quantize_state(const std::vector<Rational>& h, FixedPointFormat fmt);
std::vector<FixedPoint> rnn_step_quantized(const SimpleRnn& rnn,
                                           const std::vector<FixedPoint>& h, int sym);
RnnRunResult rnn_run_quantized(const SimpleRnn& rnn, const Word& word, FixedPointFormat fmt);

// Breadth-first closure of the reachable quantized hidden states, yielding a
// DFA with the same S-language as the quantized network. States are named in
// discovery order. Throws StateBudgetExceededError past max_states.
Dfa extract_dfa(const SimpleRnn& rnn, FixedPointFormat fmt, const AcceptanceSet& s,
                std::size_t max_states);

// Index of the single 1 entry if h is exactly one-hot, nullopt otherwise.
std::optional<std::size_t> one_hot_index(const std::vector<Rational>& h);

} // namespace dycknet
