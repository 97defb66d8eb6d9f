#pragma once

#include <cstdint>

#include "dycknet/dfa.hpp"
#include "dycknet/dyck.hpp"

namespace dycknet {

// Deterministic generator (splitmix64). Identical streams for identical
// seeds, independent of platform and standard-library version.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Stream of Dyck-alphabet words of a fixed membership class. Every yielded
// word self-checks against classify. The Neither stream rotates through three
// strategies: random noise, single-symbol corruption of a balanced word, and
// the flag-then-rebalance family whose first emission (n >= 2) is the
// rebalancing counterexample word itself.
class WordGen {
public:
    WordGen(const DyckSpec& spec, MembershipClass cls, int max_len, std::uint64_t seed);
    Word next();

private:
    Word gen_in_dyck(int max_len);
    Word gen_in_prefix();
    Word gen_neither();

    DyckSpec spec_;
    MembershipClass cls_;
    int max_len_;
    Rng rng_;
    std::uint64_t count_ = 0;
};

// Uniformly random word of length in [0, max_len] over an alphabet of the
// given size.
Word random_word(Rng& rng, std::size_t alphabet_size, int max_len);

// Random total DFA: 1..max_states states named q0.., 1..max_symbols symbols
// named a.., uniform transitions, each state accepting with probability 1/2.
Dfa random_dfa(Rng& rng, int max_states, int max_symbols);

} // namespace dycknet
