#pragma once

#include <string>
#include <utility>

#include "dycknet/gru.hpp"
#include "dycknet/rnn_compile.hpp"
#include "dycknet/simple_rnn.hpp"

namespace dycknet {

// Weights files. Simple-RNN entries are exact "p/q" strings; GRU entries are
// round-trippable decimal strings at the file's weight precision, with
// "+inf"/"-inf" admitted only inside Uz. Serialization is byte-deterministic
// for fixed inputs, and parse(serialize(x)) reproduces x bit for bit.

enum class ModelKind { SimpleRnnModel, GruModel };

ModelKind peek_model_kind(const std::string& json_text);

std::string rnn_to_json(const SimpleRnn& rnn, const AcceptanceSet& acceptance);
std::pair<SimpleRnn, AcceptanceSet> rnn_from_json(const std::string& json_text);

std::string gru_to_json(const Gru& gru, const AcceptanceSet& acceptance);
std::pair<Gru, AcceptanceSet> gru_from_json(const std::string& json_text);

std::string cfl_spec_to_json(const CflSpec& spec);
CflSpec cfl_spec_from_json(const std::string& json_text);

} // namespace dycknet
