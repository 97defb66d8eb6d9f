#include "dycknet/wordgen.hpp"

namespace dycknet {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::below(0)");
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

WordGen::WordGen(const DyckSpec& spec, MembershipClass cls, int max_len, std::uint64_t seed)
    : spec_(spec), cls_(cls), max_len_(max_len), rng_(seed) {
    if (max_len_ < 0) throw DomainError("max_len must be nonnegative");
    if (max_len_ == 0 && cls != MembershipClass::InDyck)
        throw DomainError("only the empty balanced word fits in max_len 0");
}

Word WordGen::gen_in_dyck(int max_len) {
    const int half = max_len / 2;
    const int target = 2 * static_cast<int>(rng_.below(static_cast<std::uint64_t>(half) + 1));
    Word w;
    std::vector<int> stack;
    int remaining = target;
    while (remaining > 0) {
        const bool must_open = stack.empty();
        const bool must_close = static_cast<int>(stack.size()) == remaining;
        const bool open = must_open || (!must_close && rng_.below(2) == 0);
        if (open) {
            const int type = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(spec_.n)));
            stack.push_back(type);
            w.push_back(type - 1);
        } else {
            w.push_back(spec_.n + stack.back() - 1);
            stack.pop_back();
        }
        --remaining;
    }
    return w;
}

Word WordGen::gen_in_prefix() {
    const int len = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(std::max(1, max_len_))));
    Word w;
    std::vector<int> stack;
    for (int t = 0; t < len; ++t) {
        const bool open = stack.empty() || rng_.below(2) == 0;
        if (open) {
            const int type = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(spec_.n)));
            stack.push_back(type);
            w.push_back(type - 1);
        } else {
            w.push_back(spec_.n + stack.back() - 1);
            stack.pop_back();
        }
    }
    if (stack.empty()) {
        // Balanced by chance; drop the final closer to leave a proper prefix.
        w.pop_back();
        if (w.empty()) {
            const int type = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(spec_.n)));
            w.push_back(type - 1);
        }
    }
    return w;
}

Word WordGen::gen_neither() {
    std::uint64_t strategy = count_ % 3;
    // The fixed patterns below need room; tiny caps fall back to noise.
    if (strategy != 0 && max_len_ < (spec_.n == 1 ? 2 : 6)) strategy = 0;
    if (strategy == 0) {
        // Random noise, resampled until it misclassifies.
        for (;;) {
            const int len = 1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(std::max(1, max_len_))));
            Word w;
            for (int t = 0; t < len; ++t)
                w.push_back(static_cast<int>(rng_.below(static_cast<std::uint64_t>(2 * spec_.n))));
            if (classify(w, spec_) == MembershipClass::Neither) return w;
        }
    }
    if (strategy == 1) {
        // Corrupt one symbol of a balanced word.
        for (;;) {
            Word w = gen_in_dyck(std::max(2, max_len_));
            if (w.size() < 2) continue;
            const std::size_t pos = static_cast<std::size_t>(rng_.below(w.size()));
            const int old = w[pos];
            int repl = old;
            while (repl == old)
                repl = static_cast<int>(rng_.below(static_cast<std::uint64_t>(2 * spec_.n)));
            w[pos] = repl;
            if (classify(w, spec_) == MembershipClass::Neither) return w;
        }
    }
    // Flag-then-rebalance family: a wrong closer whose state is later driven
    // back to zero, so state alone cannot reject the word. Orientation
    // alternates to cover both the premature closer (i > j) and the
    // too-large-state closer (i < j).
    Word w;
    if (spec_.n == 1) {
        w = {spec_.n, 0}; // )1 (1
    } else {
        const int a = 0;           // type 1, 0-based open index
        const int b = spec_.n - 1; // type n
        const bool low_first = (count_ / 3) % 2 == 0;
        if (low_first) {
            // (_n )_1 (_1 )_n (_n )_n -- the rebalancing counterexample shape.
            w = {b, spec_.n + a, a, spec_.n + b, b, spec_.n + b};
        } else {
            // (_1 )_n (_n )_1 (_1 )_1 -- mirror orientation, i > j at the flag.
            w = {a, spec_.n + b, b, spec_.n + a, a, spec_.n + a};
        }
    }
    // Later emissions get balanced padding around the pattern for variety.
    if (count_ >= 3) {
        const int room = std::max(0, max_len_ - static_cast<int>(w.size()));
        Word prefix = gen_in_dyck(room);
        prefix.insert(prefix.end(), w.begin(), w.end());
        w = std::move(prefix);
    }
    if (classify(w, spec_) != MembershipClass::Neither)
        throw Error("rebalance pattern failed self-check");
    return w;
}

Word WordGen::next() {
    Word w;
    switch (cls_) {
    case MembershipClass::InDyck: w = gen_in_dyck(max_len_); break;
    case MembershipClass::InPrefix: w = gen_in_prefix(); break;
    case MembershipClass::Neither: w = gen_neither(); break;
    }
    ++count_;
    if (classify(w, spec_) != cls_) throw Error("word generator failed self-check");
    return w;
}

Word random_word(Rng& rng, std::size_t alphabet_size, int max_len) {
    if (alphabet_size == 0) throw DomainError("empty alphabet");
    const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    Word w;
    w.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        w.push_back(static_cast<int>(rng.below(alphabet_size)));
    return w;
}

Dfa random_dfa(Rng& rng, int max_states, int max_symbols) {
    if (max_states < 1 || max_symbols < 1) throw DomainError("random_dfa needs positive bounds");
    const int nq = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_states)));
    const int ns = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_symbols)));
    std::vector<std::string> syms;
    for (int x = 0; x < ns; ++x) syms.push_back(std::string(1, static_cast<char>('a' + x)));
    std::vector<std::string> states;
    for (int q = 0; q < nq; ++q) states.push_back("q" + std::to_string(q));
    Dfa dfa{Alphabet(syms), states, 0, {}, {}};
    dfa.accepting.resize(static_cast<std::size_t>(nq));
    for (int q = 0; q < nq; ++q) dfa.accepting[static_cast<std::size_t>(q)] = rng.below(2) == 0;
    dfa.delta.assign(static_cast<std::size_t>(nq), std::vector<int>(static_cast<std::size_t>(ns), 0));
    for (int q = 0; q < nq; ++q)
        for (int x = 0; x < ns; ++x)
            dfa.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] =
                static_cast<int>(rng.below(static_cast<std::uint64_t>(nq)));
    dfa.validate();
    return dfa;
}

} // namespace dycknet
