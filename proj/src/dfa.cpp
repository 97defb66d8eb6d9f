#include "dycknet/dfa.hpp"

#include <set>

#include <json.hpp>

namespace dycknet {

void Dfa::validate() const {
    if (states.empty()) throw DomainError("DFA needs at least one state");
    std::set<std::string> seen;
    for (const auto& s : states)
        if (!seen.insert(s).second) throw DomainError("duplicate state name '" + s + "'");
    if (initial < 0 || static_cast<std::size_t>(initial) >= states.size())
        throw DomainError("DFA initial state out of range");
    if (accepting.size() != states.size()) throw DomainError("accepting flags size mismatch");
    if (delta.size() != states.size()) throw DomainError("transition table must cover every state");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size())
            throw DomainError("transition table must be total over the alphabet");
        for (const int t : row)
            if (t < 0 || static_cast<std::size_t>(t) >= states.size())
                throw DomainError("transition target out of range");
    }
}

int Dfa::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<int>(i);
    throw DomainError("unknown state '" + name + "'");
}

DfaRunResult run_dfa(const Dfa& dfa, const Word& word) {
    int q = dfa.initial;
    for (const int sym : word) {
        if (sym < 0 || static_cast<std::size_t>(sym) >= dfa.alphabet.size())
            throw UnknownSymbolError("symbol index outside the DFA alphabet");
        q = dfa.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(sym)];
    }
    return {q, dfa.accepting[static_cast<std::size_t>(q)]};
}

namespace {

using json = nlohmann::ordered_json;

} // namespace

Dfa dfa_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad DFA JSON: ") + e.what());
    }
    try {
        Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
        std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
        Dfa dfa{alphabet, states, 0, {}, {}};
        dfa.initial = dfa.state_index(j.at("initial").get<std::string>());
        dfa.accepting.assign(states.size(), false);
        for (const auto& name : j.at("accepting").get<std::vector<std::string>>())
            dfa.accepting[static_cast<std::size_t>(dfa.state_index(name))] = true;
        dfa.delta.assign(states.size(), std::vector<int>(alphabet.size(), -1));
        const auto& trans = j.at("transitions");
        for (const auto& [from, row] : trans.items()) {
            const int qi = dfa.state_index(from);
            for (const auto& [sym, to] : row.items()) {
                dfa.delta[static_cast<std::size_t>(qi)][static_cast<std::size_t>(alphabet.index_of(sym))] =
                    dfa.state_index(to.get<std::string>());
            }
        }
        dfa.validate();
        return dfa;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad DFA JSON: ") + e.what());
    }
}

std::string dfa_to_json(const Dfa& dfa) {
    dfa.validate();
    json j;
    j["alphabet"] = dfa.alphabet.symbols();
    j["states"] = dfa.states;
    j["initial"] = dfa.states[static_cast<std::size_t>(dfa.initial)];
    json acc = json::array();
    for (std::size_t i = 0; i < dfa.states.size(); ++i)
        if (dfa.accepting[i]) acc.push_back(dfa.states[i]);
    j["accepting"] = std::move(acc);
    json trans = json::object();
    for (std::size_t q = 0; q < dfa.states.size(); ++q) {
        json row = json::object();
        for (std::size_t x = 0; x < dfa.alphabet.size(); ++x)
            row[dfa.alphabet.name(x)] = dfa.states[static_cast<std::size_t>(dfa.delta[q][x])];
        trans[dfa.states[q]] = std::move(row);
    }
    j["transitions"] = std::move(trans);
    return j.dump(2) + "\n";
}

} // namespace dycknet
