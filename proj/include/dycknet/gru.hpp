#pragma once

#include "dycknet/acceptance.hpp"
#include "dycknet/alphabet.hpp"
#include "dycknet/dyck.hpp"
#include "dycknet/extended.hpp"
#include "dycknet/matrix.hpp"

namespace dycknet {

// Final readout f(h). DyckReadout is the nonlinear functional
// |h_1|/h_2 - h_4 - h_8 + 2 over the first eight components;
// DyckPlusLinear adds a linear row on top (used by the CFL composition,
// whose regular block lives past the first eight nodes).
struct OutputFunctional {
    enum class Kind { Linear, DyckReadout, DyckPlusLinear };

    static OutputFunctional linear(Matrix<BigFloat> wo);
    static OutputFunctional dyck_readout();
    static OutputFunctional dyck_plus_linear(Matrix<BigFloat> wo);

    Kind kind;
    std::optional<Matrix<BigFloat>> Wo; // 1 x m where applicable
};

// Gated recurrent unit:
//   z_t = sigma(W_z x_t + U_z h_{t-1} + b_z)
//   r_t = sigma(W_r x_t + U_r h_{t-1} + b_r)
//   h_t = z_t o h_{t-1} + (1 - z_t) o tanh(W_h x_t + U_h (r_t o h_{t-1}) + b_h)
//   o_t = f(h_t)
// U_z may carry +/-inf entries; sigma of an infinite gate sum is exactly 1 or
// 0 via a sign test on the gated component (GateDegenerateError at exact 0).
// Reported values (trace entries, outputs) carry `precision` bits; the
// recurrence itself runs with step_guard_bits extra so that the cancellation
// inside close steps lands in the guard, not in the reported digits. Setting
// step_guard_bits = 0 makes every intermediate honor `precision` exactly,
// which is the knob used to demonstrate genuinely starved arithmetic.
struct Gru {
    Alphabet alphabet;
    Matrix<BigFloat> Wz, Wr, Wh, Uh, Ur; // Wz/Wr/Wh: m x |alphabet|; Uh/Ur: m x m
    Matrix<ExtendedWeight> Uz;           // m x m
    std::vector<BigFloat> bz, br, bh, h0;
    OutputFunctional output;
    unsigned precision;
    unsigned step_guard_bits = 64;

    std::size_t hidden_size() const { return h0.size(); }
    unsigned work_precision() const { return precision + step_guard_bits; }
    // Shape checks. Infinities cannot appear outside U_z by construction:
    // every other matrix is over finite BigFloat.
    void validate() const;
};

struct GruStepResult {
    std::vector<BigFloat> z, r, h;
};

GruStepResult gru_step(const Gru& gru, const std::vector<BigFloat>& h, int sym);

BigFloat eval_output(const OutputFunctional& f, const std::vector<BigFloat>& h, unsigned prec);

struct GruTraceStep {
    int t;
    int sym; // -1 at t = 0
    std::vector<BigFloat> z, r; // empty at t = 0
    std::vector<BigFloat> h;
    BigFloat o;
};

struct GruRunResult {
    BigFloat output;
    std::vector<GruTraceStep> trace;
};

GruRunResult gru_run(const Gru& gru, const Word& word);

// Per-step deviation of the scaled tracker components from the exact state
// recurrences: eps1_t = (2n+1)^{kt} h_{1,t} - h_{1,0} (2n+1)^{b_t - a_t} - s_t
// (the offset term vanishes for the h_{1,0} = 0 tracker variant), and the
// mirror eps5 against s-bar when the hidden layer has 8 nodes.
struct ErrorTrace {
    std::vector<BigFloat> eps1;
    std::vector<BigFloat> eps5; // empty for the 3-node tracker
    Rational bound;            // 2 (2n+1)^(-2k+7)
    bool ok;
    int first_violation;       // -1 when ok
};

// Word must lie in P_n u D_n (PreconditionError otherwise).
ErrorTrace compute_error_trace(const Gru& gru, const Word& word, const DyckSpec& spec, int k);

// Same computation; throws BoundViolatedError on the first violating step.
ErrorTrace check_error_bound(const Gru& gru, const Word& word, const DyckSpec& spec, int k);

// Working precision sufficient for the golden traces and bound checks here:
// ceil((2k+4) log2(2n+1)) + ceil(log2(max_len+1)) + 32.
unsigned required_precision(int n, int k, std::size_t max_len);

// The "sufficiently large k" inequalities behind the four acceptance cases of
// the Dyck GRU, checked exactly; throws KTooSmallError when any fails.
void check_k_sufficient(int n, int k);

} // namespace dycknet
