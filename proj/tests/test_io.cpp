#include <catch2/catch_amalgamated.hpp>

#include "dycknet/gru_compile.hpp"
#include "dycknet/weights_io.hpp"
#include "dycknet/wordgen.hpp"

using namespace dycknet;

namespace {

Dfa opens_then_closes_dfa() {
    Dfa dfa{dyck_alphabet(1), {"opens", "closes", "dead"}, 0, {true, true, false},
            {{0, 1}, {2, 1}, {2, 2}}};
    dfa.validate();
    return dfa;
}

} // namespace

TEST_CASE("simple-rnn weights round trip bit for bit") {
    const CompiledRnn c = build_dyck_rnn(DyckSpec(2));
    const std::string text = rnn_to_json(c.rnn, c.acceptance);
    REQUIRE(peek_model_kind(text) == ModelKind::SimpleRnnModel);

    const auto [rnn, acceptance] = rnn_from_json(text);
    REQUIRE(rnn_to_json(rnn, acceptance) == text);

    // Serialization is deterministic and the parsed network behaves
    // identically.
    REQUIRE(rnn_to_json(c.rnn, c.acceptance) == text);
    WordGen gen(DyckSpec(2), MembershipClass::Neither, 24, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const Word w = gen.next();
        REQUIRE(rnn_run(rnn, w).output == rnn_run(c.rnn, w).output);
    }
}

TEST_CASE("compiled-DFA weights carry the exact-zero acceptance") {
    Dfa dfa{Alphabet({"a", "b"}), {"even", "odd"}, 0, {true, false}, {{1, 0}, {0, 1}}};
    dfa.validate();
    const CompiledRnn c = compile_dfa_to_rnn(dfa);
    const auto [rnn, acceptance] = rnn_from_json(rnn_to_json(c.rnn, c.acceptance));
    REQUIRE(acceptance.kind() == AcceptanceSet::Kind::ExactZero);
    REQUIRE(rnn.hidden_size() == 4);
    REQUIRE(rnn.bh[0] == Rational(-1));
}

TEST_CASE("gru weights round trip bit for bit") {
    const int k = 5;
    const unsigned p = required_precision(2, k, 16);
    const CompiledGru c = build_dyck_gru(DyckSpec(2), k, p);
    const std::string text = gru_to_json(c.gru, c.acceptance);
    REQUIRE(peek_model_kind(text) == ModelKind::GruModel);

    const auto [gru, acceptance] = gru_from_json(text);
    REQUIRE(gru_to_json(gru, acceptance) == text);
    REQUIRE(gru.precision == p);
    REQUIRE(acceptance.kind() == AcceptanceSet::Kind::OpenInterval);
    REQUIRE(acceptance.hi() == Rational(1, 5));
    REQUIRE(gru.Uz.at(3, 0).kind() == ExtendedWeight::Kind::PlusInf);
    REQUIRE(gru.Uz.at(7, 4).kind() == ExtendedWeight::Kind::PlusInf);

    WordGen gen(DyckSpec(2), MembershipClass::InPrefix, 16, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const Word w = gen.next();
        REQUIRE(gru_run(gru, w).output.cmp(gru_run(c.gru, w).output) == 0);
    }
}

TEST_CASE("composed gru weights round trip") {
    const int k = 5;
    const unsigned p = required_precision(1, k, 12);
    const CompiledGru c = compile_cfl_gru(CflSpec{DyckSpec(1), opens_then_closes_dfa()}, k, p);
    const std::string text = gru_to_json(c.gru, c.acceptance);
    const auto [gru, acceptance] = gru_from_json(text);
    REQUIRE(gru.output.kind == OutputFunctional::Kind::DyckPlusLinear);
    REQUIRE(gru_to_json(gru, acceptance) == text);
    const Word w = parse_word(gru.alphabet, "(1 (1 )1 )1");
    REQUIRE(gru_run(gru, w).output.cmp(gru_run(c.gru, w).output) == 0);
}

TEST_CASE("cfl spec json") {
    const CflSpec spec{DyckSpec(1), opens_then_closes_dfa()};
    const std::string text = cfl_spec_to_json(spec);
    const CflSpec back = cfl_spec_from_json(text);
    REQUIRE(back.dyck.n == 1);
    REQUIRE(back.regular.states == spec.regular.states);
    REQUIRE(cfl_spec_to_json(back) == text);

    // A regular component over the wrong alphabet is rejected.
    REQUIRE_THROWS_AS(
        cfl_spec_from_json("{\"n\":2,\"regular\":" + dfa_to_json(opens_then_closes_dfa()) + "}"),
        Error);
}

TEST_CASE("malformed weights are parse errors") {
    REQUIRE_THROWS_AS(peek_model_kind("{"), ParseError);
    REQUIRE_THROWS_AS(peek_model_kind("{\"model\":\"other\"}"), ParseError);
    REQUIRE_THROWS_AS(rnn_from_json("{\"model\":\"simple_rnn\"}"), ParseError);
    REQUIRE_THROWS_AS(gru_from_json("{\"model\":\"gru\"}"), ParseError);
}

TEST_CASE("infinities parse only as the two literals") {
    const int k = 5;
    const unsigned p = required_precision(2, k, 8);
    const CompiledGru c = build_dyck_gru(DyckSpec(2), k, p);
    std::string text = gru_to_json(c.gru, c.acceptance);
    const auto pos = text.find("\"+inf\"");
    REQUIRE(pos != std::string::npos);
    std::string broken = text;
    broken.replace(pos, 6, "\"+huge\"");
    REQUIRE_THROWS_AS(gru_from_json(broken), ParseError);
}
