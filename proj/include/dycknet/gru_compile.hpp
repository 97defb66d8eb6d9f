#pragma once

#include "dycknet/gru.hpp"
#include "dycknet/rnn_compile.hpp"

namespace dycknet {

// The N = |Q||Sigma| dimensional state vectors s_i in {0, 1/4}^N: block i
// (one block of |Sigma| consecutive coordinates per DFA state) holds 1/4.
// The state map g is the identity on declaration order; the symbol map h is
// the alphabet order.
struct StateEmbedding {
    std::size_t num_states;
    std::size_t num_symbols;
    std::vector<std::vector<Rational>> s; // s[i] has length num_states*num_symbols

    std::size_t dim() const { return num_states * num_symbols; }
};

StateEmbedding make_state_embedding(std::size_t num_states, std::size_t num_symbols);

struct CompiledGru {
    Gru gru;
    AcceptanceSet acceptance;
};

struct CompiledDfaGru {
    Gru gru;
    AcceptanceSet acceptance;
    StateEmbedding embedding;
};

// DFA -> GRU by solving U_h C = B, with C assembled exactly (it is rational)
// and inverted exactly; B holds the tanh^-1 targets. W_o sends s_i to 0 for
// accepting states and 1 otherwise. Acceptance is the small interval
// |o| < 2^-16 around zero rather than exact zero: the gate values pass
// through rounded sigmoids, so exact consistency is only available with
// idealized activations.
CompiledDfaGru compile_dfa_to_gru(const Dfa& dfa, unsigned precision);

struct DecodeResult {
    int state;
    BigFloat residual; // infinity-norm distance to the chosen embedding vector
};

// Nearest embedding vector in the infinity norm. AmbiguousDecodeError when
// the best two residuals are within tol of each other.
DecodeResult decode_state(const std::vector<BigFloat>& h, const StateEmbedding& emb,
                          const Rational& tol = Rational(1, 65536));

// The 8-node Dyck GRU; its (0, (2n+1)^-1)-language is D_n. KTooSmallError
// when k fails the acceptance-case inequalities; DomainError when the
// precision is below required_precision(n, k, 1).
CompiledGru build_dyck_gru(const DyckSpec& spec, int k, unsigned precision);

// The 3-node tracker (no gates, no infinite weights) whose first component
// follows the rescaled state s'; h10 is the initial first component. This is
// the h_{1,0} = 0 object the tracking-error bound is stated for.
Gru build_dyck_tracker_gru(const DyckSpec& spec, int k, unsigned precision, const Rational& h10);

// Stacks the Dyck GRU (first 8 nodes) with a compiled DFA GRU; the output is
// the Dyck readout plus the regular block's linear row, and the acceptance
// interval is the Dyck one. The regular component must produce outputs in
// {0, 1} (which compile_dfa_to_gru's construction does).
CompiledGru compose_cfl_gru(const Gru& dyck_gru, const Gru& dfa_gru);

CompiledGru compile_cfl_gru(const CflSpec& spec, int k, unsigned precision);

} // namespace dycknet
