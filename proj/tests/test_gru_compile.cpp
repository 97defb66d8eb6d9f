#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "dycknet/elementary.hpp"
#include "dycknet/gru_compile.hpp"
#include "dycknet/wordgen.hpp"

using namespace dycknet;

namespace {

Dfa parity_over(const Alphabet& alphabet) {
    // Even number of the first symbol.
    std::vector<std::vector<int>> delta(2, std::vector<int>(alphabet.size(), 0));
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
        delta[0][x] = x == 0 ? 1 : 0;
        delta[1][x] = x == 0 ? 0 : 1;
    }
    Dfa dfa{alphabet, {"even", "odd"}, 0, {true, false}, delta};
    dfa.validate();
    return dfa;
}

Dfa opens_then_closes_dfa() {
    Dfa dfa{dyck_alphabet(1), {"opens", "closes", "dead"}, 0, {true, true, false},
            {{0, 1}, {2, 1}, {2, 2}}};
    dfa.validate();
    return dfa;
}

void walk_words(std::size_t num_symbols, int max_len,
                const std::function<void(const Word&, int)>& visit_push,
                const std::function<void()>& visit_pop) {
    Word word;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(word.size()) == max_len) return;
        for (std::size_t x = 0; x < num_symbols; ++x) {
            word.push_back(static_cast<int>(x));
            visit_push(word, static_cast<int>(x));
            rec();
            visit_pop();
            word.pop_back();
        }
    };
    rec();
}

} // namespace

TEST_CASE("state embedding block structure") {
    const StateEmbedding emb = make_state_embedding(2, 2);
    REQUIRE(emb.dim() == 4);
    REQUIRE(emb.s[0] == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(0), Rational(0)});
    REQUIRE(emb.s[1] == std::vector<Rational>{Rational(0), Rational(0), Rational(1, 4), Rational(1, 4)});
}

TEST_CASE("reset-target matrix determinant matches the closed form") {
    // det(C) = 0.1^N (|Sigma|+1)^|Q|; assembled exactly, compared exactly.
    for (const auto& [nq, ns] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 2}, {1, 3}, {3, 2}, {2, 3}}) {
        const StateEmbedding emb = make_state_embedding(nq, ns);
        const std::size_t dim = emb.dim();
        Matrix<Rational> c(dim, dim, Rational(0));
        for (std::size_t i = 0; i < nq; ++i)
            for (std::size_t j = 0; j < ns; ++j)
                for (std::size_t kk = 0; kk < dim; ++kk) {
                    const Rational r = (kk % ns == j % ns) ? Rational(4, 5) : Rational(2, 5);
                    c.at(kk, i * ns + j) = r * emb.s[i][kk];
                }
        const Rational expect = Rational::pow(Rational(1, 10), static_cast<long>(dim)) *
                                Rational::pow(Rational(static_cast<long>(ns) + 1),
                                              static_cast<long>(nq));
        REQUIRE(det(c) == expect);
        if (nq == 2 && ns == 2) REQUIRE(expect == Rational(9, 10000));
    }
}

TEST_CASE("solved update matrix satisfies the defining equations") {
    Rng rng(201);
    for (int trial = 0; trial < 8; ++trial) {
        const Dfa dfa = random_dfa(rng, 4, 3);
        const unsigned p = 96;
        const CompiledDfaGru c = compile_dfa_to_gru(dfa, p);
        const std::size_t ns = dfa.alphabet.size();
        const std::size_t dim = c.embedding.dim();

        const BigFloat tol = BigFloat::mul_2exp(BigFloat::from_long(1, 256), 16 - static_cast<long>(p));
        for (std::size_t i = 0; i < dfa.num_states(); ++i) {
            for (std::size_t x = 0; x < ns; ++x) {
                const std::size_t target = static_cast<std::size_t>(dfa.delta[i][x]);
                // r = sigma(W_r e_x), gated = r o s_i, expect tanh^-1(2 s_j - s_i) = U_h gated.
                std::vector<BigFloat> gated;
                for (std::size_t kk = 0; kk < dim; ++kk) {
                    const BigFloat r = sigmoid(c.gru.Wr.at(kk, x).round_to(p));
                    gated.push_back(r * BigFloat::from_rational(c.embedding.s[i][kk], p));
                }
                for (std::size_t kk = 0; kk < dim; ++kk) {
                    const Rational arg = Rational(2) * c.embedding.s[target][kk] -
                                         c.embedding.s[i][kk];
                    REQUIRE(abs_value(arg) < Rational(1)); // tanh^-1 stays defined
                    BigFloat rhs(p);
                    for (std::size_t jj = 0; jj < dim; ++jj)
                        rhs = rhs + c.gru.Uh.at(kk, jj).round_to(p) * gated[jj];
                    const BigFloat lhs = tanh_inv_q(arg, p);
                    REQUIRE(abs_value(lhs.round_to(256) - rhs.round_to(256)) <= tol);
                }
            }
        }
    }
}

TEST_CASE("decode_state") {
    const StateEmbedding emb = make_state_embedding(3, 2);
    const unsigned p = 96;
    const auto lift = [&](std::size_t i) {
        std::vector<BigFloat> h;
        for (const auto& v : emb.s[i]) h.push_back(BigFloat::from_rational(v, p));
        return h;
    };

    SECTION("exact vectors decode with zero residual") {
        const DecodeResult d = decode_state(lift(2), emb);
        REQUIRE(d.state == 2);
        REQUIRE(d.residual.is_zero());
    }

    SECTION("small perturbations decode to the same state") {
        std::vector<BigFloat> h = lift(1);
        h[2] = h[2] + BigFloat::from_rational(Rational(1, 1000000000), p);
        const DecodeResult d = decode_state(h, emb);
        REQUIRE(d.state == 1);
        REQUIRE(d.residual.sign() > 0);
    }

    SECTION("midpoints are ambiguous") {
        std::vector<BigFloat> h = lift(0);
        for (std::size_t kk = 0; kk < emb.dim(); ++kk)
            h[kk] = BigFloat::from_rational(Rational(1, 8), p);
        REQUIRE_THROWS_AS(decode_state(h, emb), AmbiguousDecodeError);
    }
}

TEST_CASE("compiled network tracks the automaton state and verdict") {
    Rng rng(301);
    for (int trial = 0; trial < 6; ++trial) {
        const Dfa dfa = random_dfa(rng, 4, 2);
        const CompiledDfaGru c = compile_dfa_to_gru(dfa, 96);

        std::vector<std::vector<BigFloat>> hs{c.gru.h0};
        std::vector<int> qs{dfa.initial};
        const auto check = [&]() {
            std::vector<BigFloat> run_h;
            for (const auto& v : hs.back()) run_h.push_back(v.round_to(c.gru.precision));
            const DecodeResult d = decode_state(run_h, c.embedding);
            REQUIRE(d.state == qs.back());
            const BigFloat o = eval_output(c.gru.output, hs.back(), c.gru.precision);
            REQUIRE(c.acceptance.contains(o) == dfa.accepting[static_cast<std::size_t>(qs.back())]);
        };
        check();
        walk_words(dfa.alphabet.size(), 7,
                   [&](const Word&, int sym) {
                       hs.push_back(gru_step(c.gru, hs.back(), sym).h);
                       qs.push_back(dfa.delta[static_cast<std::size_t>(qs.back())]
                                             [static_cast<std::size_t>(sym)]);
                       check();
                   },
                   [&]() {
                       hs.pop_back();
                       qs.pop_back();
                   });
    }
}

TEST_CASE("parity differential through the gated network") {
    const Dfa dfa = parity_over(Alphabet({"a", "b"}));
    const CompiledDfaGru c = compile_dfa_to_gru(dfa, 96);
    Rng rng(401);
    for (int trial = 0; trial < 120; ++trial) {
        const Word w = random_word(rng, 2, 10);
        const GruRunResult r = gru_run(c.gru, w);
        REQUIRE(c.acceptance.contains(r.output) == run_dfa(dfa, w).accepted);
        const DecodeResult d = decode_state(r.trace.back().h, c.embedding);
        REQUIRE(d.state == run_dfa(dfa, w).final_state);
    }
}

TEST_CASE("the 8-node recognizer construction") {
    const int k = 5;
    const unsigned p = required_precision(2, k, 8);
    const CompiledGru c = build_dyck_gru(DyckSpec(2), k, p);

    SECTION("initial tracker value is 3/125 to storage precision") {
        for (const std::size_t i : {0u, 4u}) {
            const unsigned pw = c.gru.h0[i].precision();
            const BigFloat err =
                abs_value(c.gru.h0[i] - BigFloat::from_rational(Rational(3, 125), pw + 32));
            REQUIRE(err.cmp(Rational(3, 125) * Rational::pow(Rational(2), 1 - static_cast<long>(pw))) <= 0);
        }
        for (const std::size_t i : {1u, 2u, 3u, 5u, 6u, 7u})
            REQUIRE(c.gru.h0[i].cmp(Rational(1)) == 0);
    }

    SECTION("acceptance interval is (0, 1/5)") {
        REQUIRE(c.acceptance.kind() == AcceptanceSet::Kind::OpenInterval);
        REQUIRE(c.acceptance.lo() == Rational(0));
        REQUIRE(c.acceptance.hi() == Rational(1, 5));
    }

    SECTION("infinite gates sit exactly on the two latch rows") {
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                const bool is_latch = (i == 3 && j == 0) || (i == 7 && j == 4);
                REQUIRE(c.gru.Uz.at(i, j).is_infinite() == is_latch);
            }
    }

    SECTION("update gate entries invert back to the decay constants") {
        const BigFloat z1 = sigmoid(c.gru.Wz.at(0, 0).round_to(p));
        REQUIRE(abs_value(z1.round_to(256) -
                          BigFloat::from_rational(Rational::pow(Rational(5), -6), 256))
                    .cmp(Rational::pow(Rational(2), -60) * Rational::pow(Rational(5), -6)) < 0);
        const BigFloat z_close = sigmoid(c.gru.Wz.at(0, 2).round_to(p));
        REQUIRE(abs_value(z_close.round_to(256) -
                          BigFloat::from_rational(Rational::pow(Rational(5), -4), 256))
                    .cmp(Rational::pow(Rational(2), -60) * Rational::pow(Rational(5), -4)) < 0);
    }
}

TEST_CASE("tracker variant refuses invalid parameters") {
    REQUIRE_THROWS_AS(build_dyck_tracker_gru(DyckSpec(2), 1, 64, Rational(0)), KTooSmallError);
    REQUIRE_THROWS_AS(build_dyck_tracker_gru(DyckSpec(2), 5, 64, Rational(-1)), DomainError);
    REQUIRE_THROWS_AS(build_dyck_gru(DyckSpec(2), 5, 16), DomainError);
}

TEST_CASE("composition sizes and language") {
    const int k = 5;
    const unsigned p = required_precision(2, k, 20);

    SECTION("hidden size is 8 + 2nr") {
        const Dfa reg = parity_over(dyck_alphabet(2)); // r = 2, n = 2
        const CompiledGru composed =
            compose_cfl_gru(build_dyck_gru(DyckSpec(2), k, p).gru,
                            compile_dfa_to_gru(reg, p).gru);
        REQUIRE(composed.gru.hidden_size() == 8 + 2 * 2 * 2);

        Dfa three{dyck_alphabet(2), {"q0", "q1", "q2"}, 0, {true, false, true},
                  {{1, 2, 0, 1}, {2, 2, 1, 0}, {0, 1, 2, 2}}};
        three.validate();
        const CompiledGru composed3 =
            compose_cfl_gru(build_dyck_gru(DyckSpec(2), k, p).gru,
                            compile_dfa_to_gru(three, p).gru);
        REQUIRE(composed3.gru.hidden_size() == 8 + 2 * 2 * 3);
    }

    SECTION("intersection with the full language is the Dyck language") {
        Dfa all{dyck_alphabet(2), {"q0"}, 0, {true}, {{0, 0, 0, 0}}};
        all.validate();
        const CompiledGru composed = compile_cfl_gru(CflSpec{DyckSpec(2), all}, k,
                                                     required_precision(2, k, 24));
        const DyckSpec spec(2);
        for (const auto cls :
             {MembershipClass::InDyck, MembershipClass::InPrefix, MembershipClass::Neither}) {
            WordGen gen(spec, cls, 24, 17);
            for (int trial = 0; trial < 60; ++trial) {
                const Word w = gen.next();
                const GruRunResult r = gru_run(composed.gru, w);
                REQUIRE(composed.acceptance.contains(r.output) ==
                        (classify(w, spec) == MembershipClass::InDyck));
            }
        }
    }

    SECTION("a^m b^m against the hand oracle on every word up to length 12") {
        const CflSpec spec{DyckSpec(1), opens_then_closes_dfa()};
        const CompiledGru composed = compile_cfl_gru(spec, k, required_precision(1, k, 12));
        REQUIRE(composed.gru.hidden_size() == 8 + 2 * 1 * 3);

        const auto is_anbn = [](const Word& w) {
            std::size_t i = 0;
            while (i < w.size() && w[i] == 0) ++i;
            const std::size_t opens = i;
            while (i < w.size() && w[i] == 1) ++i;
            return i == w.size() && w.size() == 2 * opens;
        };
        std::vector<std::vector<BigFloat>> hs{composed.gru.h0};
        const auto accepted_now = [&]() {
            return composed.acceptance.contains(
                eval_output(composed.gru.output, hs.back(), composed.gru.precision));
        };
        REQUIRE(accepted_now() == is_anbn(Word{}));
        walk_words(2, 12,
                   [&](const Word& w, int sym) {
                       hs.push_back(gru_step(composed.gru, hs.back(), sym).h);
                       REQUIRE(accepted_now() == is_anbn(w));
                   },
                   [&]() { hs.pop_back(); });
    }

    SECTION("composition output is the sum of the component outputs") {
        Dfa reg = parity_over(dyck_alphabet(2));
        const CompiledGru dyck = build_dyck_gru(DyckSpec(2), k, p);
        const CompiledDfaGru dfa_gru = compile_dfa_to_gru(reg, p);
        const CompiledGru composed = compose_cfl_gru(dyck.gru, dfa_gru.gru);
        WordGen gen(DyckSpec(2), MembershipClass::InDyck, 16, 19);
        for (int trial = 0; trial < 30; ++trial) {
            const Word w = gen.next();
            const BigFloat combined = gru_run(composed.gru, w).output;
            const BigFloat parts =
                gru_run(dyck.gru, w).output + gru_run(dfa_gru.gru, w).output;
            const BigFloat diff = abs_value(combined.round_to(512) - parts.round_to(512));
            REQUIRE(diff.cmp(Rational::pow(Rational(2), 8 - static_cast<long>(p))) < 0);
        }
    }

    SECTION("mismatches are rejected") {
        const CompiledGru dyck = build_dyck_gru(DyckSpec(1), k, required_precision(1, k, 8));
        const CompiledDfaGru wrong = compile_dfa_to_gru(parity_over(Alphabet({"a", "b"})), 96);
        REQUIRE_THROWS_AS(compose_cfl_gru(dyck.gru, wrong.gru), AlphabetMismatchError);
        REQUIRE_THROWS_AS(compose_cfl_gru(wrong.gru, wrong.gru), PreconditionError);
    }
}
