#pragma once

#include "dycknet/dyck.hpp"
#include "dycknet/simple_rnn.hpp"

namespace dycknet {

// A context-free language presented as L = D_n intersect L(regular), with the
// regular part already relabeled onto the 2n-symbol Dyck alphabet. The
// decomposition is the caller's input; nothing here computes one.
struct CflSpec {
    DyckSpec dyck;
    Dfa regular;

    void validate() const; // regular.alphabet must equal dyck_alphabet(n)
};

struct CompiledRnn {
    SimpleRnn rnn;
    AcceptanceSet acceptance;
};

// DFA -> simple RNN with |Q||Sigma| hidden nodes labeled (symbol, state) in
// symbol-major order, b_h = -1, output weight 1 from every non-accepting
// label; the {0}-language equals L(dfa). After every step exactly one hidden
// node is 1 and its state component matches the DFA state.
CompiledRnn compile_dfa_to_rnn(const Dfa& dfa);

// The 6-node Dyck recognizer; {0}-language is D_n.
CompiledRnn build_dyck_rnn(const DyckSpec& spec);

// Stacks the two hidden layers block-diagonally and sums the outputs. Both
// components must share the alphabet, accept exactly at {0}, and have
// structurally nonnegative outputs (nonnegative W_o and b_o over ReLU
// hiddens).
CompiledRnn compose_cfl_rnn(const SimpleRnn& dyck_rnn, const SimpleRnn& dfa_rnn);

CompiledRnn compile_cfl_rnn(const CflSpec& spec);

} // namespace dycknet
