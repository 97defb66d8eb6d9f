#pragma once

#include <vector>

#include "dycknet/alphabet.hpp"
#include "dycknet/rational.hpp"

namespace dycknet {

struct DyckSpec {
    int n;
    explicit DyckSpec(int n_) : n(n_) {
        if (n < 1) throw DomainError("DyckSpec needs n >= 1");
    }
};

enum class MembershipClass { InDyck, InPrefix, Neither };

const char* membership_name(MembershipClass c);

// Symbol index helpers over the canonical Dyck order.
bool dyck_is_open(const DyckSpec& spec, int sym);
// Parenthesis type in 1..n for either an opener or a closer.
int dyck_paren_type(const DyckSpec& spec, int sym);

// Stack simulation. InDyck iff the stack empties exactly at the end with no
// underflow and no type mismatch; InPrefix iff no violation but the stack is
// nonempty; Neither once any violation occurred.
MembershipClass classify(const Word& word, const DyckSpec& spec);

// Exact state sequences plus cumulative open/close counts.
struct StateTrace {
    std::vector<Rational> s;     // s_0 .. s_m
    std::vector<long> opens;     // a_0 .. a_m
    std::vector<long> closes;    // b_0 .. b_m
};

// s_t = (2n+1)^-1 s_{t-1} + 2i (2n+1)^-1 on (_i; (2n+1) s_{t-1} - 2i on )_i.
StateTrace state_trace(const Word& word, const DyckSpec& spec);

// Rescaled state: s'_t = (2n+1)^(-1-k) s'_{t-1} + 2i (2n+1)^(-1-kt) on (_i;
// (2n+1)^(1-k) s'_{t-1} - 2i (2n+1)^(-kt) on )_i. Satisfies
// s_t = (2n+1)^(kt) s'_t exactly.
StateTrace state_trace_prime(const Word& word, const DyckSpec& spec, int k);

// Mirrored state: the plain recurrence applied as if every parenthesis of
// type i were of type n+1-i. (This is the index flip realized by the mirrored
// gate columns; it keeps type n mapped onto type 1 and vice versa.)
StateTrace state_trace_bar(const Word& word, const DyckSpec& spec);

// For word in P_n: the unique closer type j such that word + )_j stays in
// P_n u D_n; equals the type on top of the simulation stack and satisfies
// 2j/(2n+1) <= s_m < (2j+1)/(2n+1). PreconditionError otherwise.
int unique_closer(const Word& word, const DyckSpec& spec);

} // namespace dycknet
