#include "dycknet/weights_io.hpp"

#include <json.hpp>

namespace dycknet {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ") + what + " JSON: " + e.what());
    }
}

json rational_matrix(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Rational> rational_matrix_from(const json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(Rational::from_string(v.get<std::string>()));
        rows.push_back(std::move(r));
    }
    return Matrix<Rational>::from_rows(rows);
}

json rational_vector(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::vector<Rational> rational_vector_from(const json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(Rational::from_string(v.get<std::string>()));
    return out;
}

json acceptance_to_json(const AcceptanceSet& s) {
    json j;
    switch (s.kind()) {
    case AcceptanceSet::Kind::ExactZero:
        j["type"] = "exact_zero";
        break;
    case AcceptanceSet::Kind::OpenInterval:
        j["type"] = "open_interval";
        j["lo"] = s.lo().str();
        j["hi"] = s.hi().str();
        break;
    case AcceptanceSet::Kind::FiniteSet: {
        j["type"] = "finite_set";
        json vals = json::array();
        for (const auto& v : s.values()) vals.push_back(v.str());
        j["values"] = std::move(vals);
        break;
    }
    }
    return j;
}

AcceptanceSet acceptance_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "exact_zero") return AcceptanceSet::exact_zero();
    if (type == "open_interval")
        return AcceptanceSet::open_interval(Rational::from_string(j.at("lo").get<std::string>()),
                                            Rational::from_string(j.at("hi").get<std::string>()));
    if (type == "finite_set") {
        std::vector<Rational> vals;
        for (const auto& v : j.at("values")) vals.push_back(Rational::from_string(v.get<std::string>()));
        return AcceptanceSet::finite_set(std::move(vals));
    }
    throw ParseError("unknown acceptance type '" + type + "'");
}

json bigfloat_matrix(const Matrix<BigFloat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).decimal_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<BigFloat> bigfloat_matrix_from(const json& j, unsigned prec) {
    std::vector<std::vector<BigFloat>> rows;
    for (const auto& row : j) {
        std::vector<BigFloat> r;
        for (const auto& v : row) r.push_back(BigFloat::from_decimal(v.get<std::string>(), prec));
        rows.push_back(std::move(r));
    }
    return Matrix<BigFloat>::from_rows(rows);
}

json bigfloat_vector(const std::vector<BigFloat>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.decimal_str());
    return out;
}

std::vector<BigFloat> bigfloat_vector_from(const json& j, unsigned prec) {
    std::vector<BigFloat> out;
    for (const auto& v : j) out.push_back(BigFloat::from_decimal(v.get<std::string>(), prec));
    return out;
}

json extended_matrix(const Matrix<ExtendedWeight>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const ExtendedWeight& w = m.at(i, j);
            switch (w.kind()) {
            case ExtendedWeight::Kind::PlusInf: row.push_back("+inf"); break;
            case ExtendedWeight::Kind::MinusInf: row.push_back("-inf"); break;
            case ExtendedWeight::Kind::Finite: row.push_back(w.finite_value().decimal_str()); break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<ExtendedWeight> extended_matrix_from(const json& j, unsigned prec) {
    std::vector<std::vector<ExtendedWeight>> rows;
    for (const auto& row : j) {
        std::vector<ExtendedWeight> r;
        for (const auto& v : row) {
            const std::string s = v.get<std::string>();
            if (s == "+inf") r.push_back(ExtendedWeight::plus_inf());
            else if (s == "-inf") r.push_back(ExtendedWeight::minus_inf());
            else r.push_back(ExtendedWeight::finite(BigFloat::from_decimal(s, prec)));
        }
        rows.push_back(std::move(r));
    }
    return Matrix<ExtendedWeight>::from_rows(rows);
}

} // namespace

ModelKind peek_model_kind(const std::string& json_text) {
    const json j = parse_text(json_text, "weights");
    const std::string model = j.at("model").get<std::string>();
    if (model == "simple_rnn") return ModelKind::SimpleRnnModel;
    if (model == "gru") return ModelKind::GruModel;
    throw ParseError("unknown model '" + model + "'");
}

std::string rnn_to_json(const SimpleRnn& rnn, const AcceptanceSet& acceptance) {
    rnn.validate();
    json j;
    j["model"] = "simple_rnn";
    j["alphabet"] = rnn.alphabet.symbols();
    j["Wx"] = rational_matrix(rnn.Wx);
    j["Wh"] = rational_matrix(rnn.Wh);
    j["bh"] = rational_vector(rnn.bh);
    j["Wo"] = rational_matrix(rnn.Wo);
    j["bo"] = rnn.bo.str();
    j["h0"] = rational_vector(rnn.h0);
    j["acceptance"] = acceptance_to_json(acceptance);
    return j.dump(2) + "\n";
}

std::pair<SimpleRnn, AcceptanceSet> rnn_from_json(const std::string& json_text) {
    const json j = parse_text(json_text, "simple_rnn weights");
    try {
        if (j.at("model").get<std::string>() != "simple_rnn") throw ParseError("model is not simple_rnn");
        SimpleRnn rnn{Alphabet(j.at("alphabet").get<std::vector<std::string>>()),
                      rational_matrix_from(j.at("Wx")),
                      rational_matrix_from(j.at("Wh")),
                      rational_vector_from(j.at("bh")),
                      rational_matrix_from(j.at("Wo")),
                      Rational::from_string(j.at("bo").get<std::string>()),
                      rational_vector_from(j.at("h0"))};
        rnn.validate();
        return {std::move(rnn), acceptance_from_json(j.at("acceptance"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad simple_rnn weights JSON: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("bad simple_rnn weights JSON: ") + e.what());
    }
}

std::string gru_to_json(const Gru& gru, const AcceptanceSet& acceptance) {
    gru.validate();
    json j;
    j["model"] = "gru";
    j["alphabet"] = gru.alphabet.symbols();
    j["precision_bits"] = gru.precision;
    // Weights may be stored wider than the run precision (compiled values
    // carry guard bits); record their precision so parsing is lossless.
    j["weight_precision_bits"] = gru.Wz.at(0, 0).precision();
    j["Wz"] = bigfloat_matrix(gru.Wz);
    j["Uz"] = extended_matrix(gru.Uz);
    j["Wr"] = bigfloat_matrix(gru.Wr);
    j["Ur"] = bigfloat_matrix(gru.Ur);
    j["Wh"] = bigfloat_matrix(gru.Wh);
    j["Uh"] = bigfloat_matrix(gru.Uh);
    j["bz"] = bigfloat_vector(gru.bz);
    j["br"] = bigfloat_vector(gru.br);
    j["bh"] = bigfloat_vector(gru.bh);
    j["h0"] = bigfloat_vector(gru.h0);
    json out;
    switch (gru.output.kind) {
    case OutputFunctional::Kind::Linear:
        out["type"] = "linear";
        out["Wo"] = bigfloat_matrix(*gru.output.Wo);
        break;
    case OutputFunctional::Kind::DyckReadout:
        out["type"] = "dyck_readout";
        break;
    case OutputFunctional::Kind::DyckPlusLinear:
        out["type"] = "dyck_plus_linear";
        out["Wo"] = bigfloat_matrix(*gru.output.Wo);
        break;
    }
    j["output"] = std::move(out);
    j["acceptance"] = acceptance_to_json(acceptance);
    return j.dump(2) + "\n";
}

std::pair<Gru, AcceptanceSet> gru_from_json(const std::string& json_text) {
    const json j = parse_text(json_text, "gru weights");
    try {
        if (j.at("model").get<std::string>() != "gru") throw ParseError("model is not gru");
        const unsigned prec = j.at("precision_bits").get<unsigned>();
        const unsigned wprec = j.contains("weight_precision_bits")
                                   ? j.at("weight_precision_bits").get<unsigned>()
                                   : prec;
        const json& out = j.at("output");
        const std::string out_type = out.at("type").get<std::string>();
        OutputFunctional output = OutputFunctional::dyck_readout();
        if (out_type == "linear")
            output = OutputFunctional::linear(bigfloat_matrix_from(out.at("Wo"), wprec));
        else if (out_type == "dyck_plus_linear")
            output = OutputFunctional::dyck_plus_linear(bigfloat_matrix_from(out.at("Wo"), wprec));
        else if (out_type != "dyck_readout")
            throw ParseError("unknown output type '" + out_type + "'");

        Gru gru{Alphabet(j.at("alphabet").get<std::vector<std::string>>()),
                bigfloat_matrix_from(j.at("Wz"), wprec),
                bigfloat_matrix_from(j.at("Wr"), wprec),
                bigfloat_matrix_from(j.at("Wh"), wprec),
                bigfloat_matrix_from(j.at("Uh"), wprec),
                bigfloat_matrix_from(j.at("Ur"), wprec),
                extended_matrix_from(j.at("Uz"), wprec),
                bigfloat_vector_from(j.at("bz"), wprec),
                bigfloat_vector_from(j.at("br"), wprec),
                bigfloat_vector_from(j.at("bh"), wprec),
                bigfloat_vector_from(j.at("h0"), wprec),
                std::move(output),
                prec};
        gru.validate();
        return {std::move(gru), acceptance_from_json(j.at("acceptance"))};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad gru weights JSON: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("bad gru weights JSON: ") + e.what());
    }
}

std::string cfl_spec_to_json(const CflSpec& spec) {
    spec.validate();
    json j;
    j["n"] = spec.dyck.n;
    j["regular"] = json::parse(dfa_to_json(spec.regular));
    return j.dump(2) + "\n";
}

CflSpec cfl_spec_from_json(const std::string& json_text) {
    const json j = parse_text(json_text, "CFL spec");
    try {
        const int n = j.at("n").get<int>();
        CflSpec spec{DyckSpec(n), dfa_from_json(j.at("regular").dump())};
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad CFL spec JSON: ") + e.what());
    }
}

} // namespace dycknet
