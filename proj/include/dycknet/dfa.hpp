#pragma once

#include <string>
#include <vector>

#include "dycknet/alphabet.hpp"

namespace dycknet {

// Deterministic finite automaton with a total transition table.
struct Dfa {
    Alphabet alphabet;
    std::vector<std::string> states;
    int initial = 0;
    std::vector<bool> accepting;           // indexed like states
    std::vector<std::vector<int>> delta;   // [state][symbol] -> state

    // Checks totality, index ranges and name uniqueness; throws on violation.
    void validate() const;
    int state_index(const std::string& name) const;
    std::size_t num_states() const { return states.size(); }
};

struct DfaRunResult {
    int final_state;
    bool accepted;
};

DfaRunResult run_dfa(const Dfa& dfa, const Word& word);

Dfa dfa_from_json(const std::string& text);
std::string dfa_to_json(const Dfa& dfa);

} // namespace dycknet
