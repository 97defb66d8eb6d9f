#include "dycknet/dyck.hpp"

namespace dycknet {

const char* membership_name(MembershipClass c) {
    switch (c) {
    case MembershipClass::InDyck: return "InDyck";
    case MembershipClass::InPrefix: return "InPrefix";
    case MembershipClass::Neither: return "Neither";
    }
    return "?";
}

namespace {

void check_symbol(const DyckSpec& spec, int sym) {
    if (sym < 0 || sym >= 2 * spec.n) throw UnknownSymbolError("symbol index outside the Dyck alphabet");
}

} // namespace

bool dyck_is_open(const DyckSpec& spec, int sym) {
    check_symbol(spec, sym);
    return sym < spec.n;
}

int dyck_paren_type(const DyckSpec& spec, int sym) {
    check_symbol(spec, sym);
    return sym < spec.n ? sym + 1 : sym - spec.n + 1;
}

MembershipClass classify(const Word& word, const DyckSpec& spec) {
    std::vector<int> stack;
    for (const int sym : word) {
        check_symbol(spec, sym);
        const int type = dyck_paren_type(spec, sym);
        if (dyck_is_open(spec, sym)) {
            stack.push_back(type);
        } else {
            if (stack.empty() || stack.back() != type) return MembershipClass::Neither;
            stack.pop_back();
        }
    }
    return stack.empty() ? MembershipClass::InDyck : MembershipClass::InPrefix;
}

StateTrace state_trace(const Word& word, const DyckSpec& spec) {
    const Rational base(2 * spec.n + 1);
    StateTrace tr;
    tr.s.push_back(Rational(0));
    tr.opens.push_back(0);
    tr.closes.push_back(0);
    Rational s(0);
    long a = 0, b = 0;
    for (const int sym : word) {
        const int i = dyck_paren_type(spec, sym);
        if (dyck_is_open(spec, sym)) {
            s = (s + Rational(2 * i)) / base;
            ++a;
        } else {
            s = s * base - Rational(2 * i);
            ++b;
        }
        tr.s.push_back(s);
        tr.opens.push_back(a);
        tr.closes.push_back(b);
    }
    return tr;
}

StateTrace state_trace_prime(const Word& word, const DyckSpec& spec, int k) {
    if (k < 1) throw DomainError("state_trace_prime needs k >= 1");
    const Rational base(2 * spec.n + 1);
    const Rational open_mul = Rational::pow(base, -1 - k);
    const Rational close_mul = Rational::pow(base, 1 - k);
    const Rational step_scale = Rational::pow(base, -k);
    StateTrace tr;
    tr.s.push_back(Rational(0));
    tr.opens.push_back(0);
    tr.closes.push_back(0);
    Rational s(0);
    Rational scale_t(1); // (2n+1)^(-kt)
    long a = 0, b = 0;
    for (const int sym : word) {
        const int i = dyck_paren_type(spec, sym);
        scale_t *= step_scale;
        if (dyck_is_open(spec, sym)) {
            s = s * open_mul + Rational(2 * i) * scale_t / base;
            ++a;
        } else {
            s = s * close_mul - Rational(2 * i) * scale_t;
            ++b;
        }
        tr.s.push_back(s);
        tr.opens.push_back(a);
        tr.closes.push_back(b);
    }
    return tr;
}

StateTrace state_trace_bar(const Word& word, const DyckSpec& spec) {
    Word mirrored;
    mirrored.reserve(word.size());
    for (const int sym : word) {
        check_symbol(spec, sym);
        const int type = dyck_paren_type(spec, sym);
        const int flipped = spec.n + 1 - type;
        mirrored.push_back(dyck_is_open(spec, sym) ? flipped - 1 : spec.n + flipped - 1);
    }
    return state_trace(mirrored, spec);
}

int unique_closer(const Word& word, const DyckSpec& spec) {
    std::vector<int> stack;
    for (const int sym : word) {
        check_symbol(spec, sym);
        const int type = dyck_paren_type(spec, sym);
        if (dyck_is_open(spec, sym)) {
            stack.push_back(type);
        } else {
            if (stack.empty() || stack.back() != type)
                throw PreconditionError("unique_closer requires a word in P_n");
            stack.pop_back();
        }
    }
    if (stack.empty()) throw PreconditionError("unique_closer requires a word in P_n");
    return stack.back();
}

} // namespace dycknet
