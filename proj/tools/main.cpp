// dycknet: compile classical automata into recurrent-network weights, run and
// trace the networks under exact or big-float arithmetic, verify them against
// language oracles, and extract automata back out of quantized networks.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dycknet/gru_compile.hpp"
#include "dycknet/rnn_compile.hpp"
#include "dycknet/weights_io.hpp"
#include "dycknet/wordgen.hpp"

using namespace dycknet;

namespace {

// Exit codes: 0 success/verified, 1 verification mismatch, 2 usage or parse
// trouble, 3 numeric failure.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string s;
    for (const auto& t : tokens) {
        if (!s.empty()) s += ' ';
        s += t;
    }
    return s;
}

std::uint64_t seed_default() {
    if (const char* env = std::getenv("SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ParseError("SEED environment variable is not a number");
        }
    }
    return 0;
}

struct LoadedModel {
    ModelKind kind;
    SimpleRnn rnn;
    Gru gru;
    AcceptanceSet acceptance;

    LoadedModel(SimpleRnn r, AcceptanceSet a)
        : kind(ModelKind::SimpleRnnModel), rnn(std::move(r)),
          gru{rnn.alphabet,
              Matrix<BigFloat>(1, 1, BigFloat(64)),
              Matrix<BigFloat>(1, 1, BigFloat(64)),
              Matrix<BigFloat>(1, 1, BigFloat(64)),
              Matrix<BigFloat>(1, 1, BigFloat(64)),
              Matrix<BigFloat>(1, 1, BigFloat(64)),
              Matrix<ExtendedWeight>(1, 1, ExtendedWeight::finite(BigFloat(64))),
              {BigFloat(64)},
              {BigFloat(64)},
              {BigFloat(64)},
              {BigFloat(64)},
              OutputFunctional::linear(Matrix<BigFloat>(1, 1, BigFloat(64))),
              64},
          acceptance(std::move(a)) {}
    LoadedModel(Gru g, AcceptanceSet a)
        : kind(ModelKind::GruModel),
          rnn{g.alphabet,
              Matrix<Rational>(1, 1, Rational(0)),
              Matrix<Rational>(1, 1, Rational(0)),
              {Rational(0)},
              Matrix<Rational>(1, 1, Rational(0)),
              Rational(0),
              {Rational(0)}},
          gru(std::move(g)), acceptance(std::move(a)) {}

    const Alphabet& alphabet() const {
        return kind == ModelKind::SimpleRnnModel ? rnn.alphabet : gru.alphabet;
    }
};

LoadedModel load_model(const std::string& path, unsigned precision_override) {
    const std::string text = read_file(path);
    if (peek_model_kind(text) == ModelKind::SimpleRnnModel) {
        auto [rnn, acc] = rnn_from_json(text);
        return LoadedModel(std::move(rnn), std::move(acc));
    }
    auto [gru, acc] = gru_from_json(text);
    if (precision_override != 0) gru.precision = precision_override;
    return LoadedModel(std::move(gru), std::move(acc));
}

std::string rational_vec_str(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].str();
    }
    return s + "]";
}

std::string bigfloat_vec_str(const std::vector<BigFloat>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].sci_str(3);
    }
    return s + "]";
}

struct RunOutcome {
    std::string o_str;
    bool accepted;
    std::string trace_text;
};

RunOutcome run_model(const LoadedModel& model, const Word& word) {
    RunOutcome out;
    std::ostringstream trace;
    if (model.kind == ModelKind::SimpleRnnModel) {
        const RnnRunResult r = rnn_run(model.rnn, word);
        trace << "model = simple_rnn\n";
        trace << "word = " << format_word(model.rnn.alphabet, word) << "\n";
        for (const auto& step : r.trace) {
            trace << "t=" << step.t << " x="
                  << (step.sym < 0 ? std::string("-")
                                   : model.rnn.alphabet.name(static_cast<std::size_t>(step.sym)))
                  << " h=" << rational_vec_str(step.h) << " o=" << step.o.str() << "\n";
        }
        out.o_str = r.output.str();
        out.accepted = model.acceptance.contains(r.output);
    } else {
        const GruRunResult r = gru_run(model.gru, word);
        trace << "model = gru\n";
        trace << "word = " << format_word(model.gru.alphabet, word) << "\n";
        trace << "precision_bits = " << model.gru.precision << "\n";
        for (const auto& step : r.trace) {
            trace << "t=" << step.t << " x="
                  << (step.sym < 0 ? std::string("-")
                                   : model.gru.alphabet.name(static_cast<std::size_t>(step.sym)));
            if (step.t > 0) {
                trace << " z=" << bigfloat_vec_str(step.z) << " r=" << bigfloat_vec_str(step.r);
            }
            trace << " h=" << bigfloat_vec_str(step.h) << " o=" << step.o.sci_str(3) << "\n";
        }
        out.o_str = r.output.sci_str(3);
        out.accepted = model.acceptance.contains(r.output);
    }
    trace << "o = " << out.o_str << " " << (out.accepted ? "ACCEPT" : "REJECT") << "\n";
    out.trace_text = trace.str();
    return out;
}

int cmd_compile(const std::string& kind, const std::string& spec_path, int n, int k,
                unsigned precision, const std::string& out_path) {
    std::string text;
    if (kind == "dfa-rnn") {
        const CompiledRnn c = compile_dfa_to_rnn(dfa_from_json(read_file(spec_path)));
        text = rnn_to_json(c.rnn, c.acceptance);
    } else if (kind == "dyck-rnn") {
        const CompiledRnn c = build_dyck_rnn(DyckSpec(n));
        text = rnn_to_json(c.rnn, c.acceptance);
    } else if (kind == "cfl-rnn") {
        const CompiledRnn c = compile_cfl_rnn(cfl_spec_from_json(read_file(spec_path)));
        text = rnn_to_json(c.rnn, c.acceptance);
    } else if (kind == "dfa-gru") {
        const unsigned p = precision ? precision : 96;
        const CompiledDfaGru c = compile_dfa_to_gru(dfa_from_json(read_file(spec_path)), p);
        text = gru_to_json(c.gru, c.acceptance);
    } else if (kind == "dyck-gru") {
        const unsigned p = precision ? precision : required_precision(n, k, 64);
        const CompiledGru c = build_dyck_gru(DyckSpec(n), k, p);
        text = gru_to_json(c.gru, c.acceptance);
    } else if (kind == "cfl-gru") {
        const CflSpec spec = cfl_spec_from_json(read_file(spec_path));
        const unsigned p = precision ? precision : required_precision(spec.dyck.n, k, 64);
        const CompiledGru c = compile_cfl_gru(spec, k, p);
        text = gru_to_json(c.gru, c.acceptance);
    } else {
        throw ParseError("unknown compile kind '" + kind + "'");
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

enum class OracleKind { Dyck, DfaOracle, Cfl };

struct Mismatch {
    Word word;
    std::string word_str;
    std::string cls;
    bool oracle_accepts;
    bool network_accepts;
    std::string o_str;
};

int cmd_verify(const std::string& weights_path, int dyck_n, const std::string& dfa_path,
               const std::string& cfl_path, long trials, int max_len, std::uint64_t seed,
               bool as_json, unsigned precision_override) {
    const LoadedModel model = load_model(weights_path, precision_override);

    OracleKind oracle;
    int n = 0;
    Dfa dfa{Alphabet({"a"}), {"q0"}, 0, {true}, {{0}}};
    if (dyck_n > 0) {
        oracle = OracleKind::Dyck;
        n = dyck_n;
    } else if (!dfa_path.empty()) {
        oracle = OracleKind::DfaOracle;
        dfa = dfa_from_json(read_file(dfa_path));
    } else if (!cfl_path.empty()) {
        oracle = OracleKind::Cfl;
        const CflSpec spec = cfl_spec_from_json(read_file(cfl_path));
        n = spec.dyck.n;
        dfa = spec.regular;
    } else {
        throw ParseError("verify needs one of --dyck, --dfa, --cfl");
    }
    if (oracle != OracleKind::DfaOracle) {
        if (!(model.alphabet() == dyck_alphabet(n)))
            throw AlphabetMismatchError("weights alphabet does not match the Dyck alphabet");
    } else if (!(model.alphabet() == dfa.alphabet)) {
        throw AlphabetMismatchError("weights alphabet does not match the DFA alphabet");
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Mismatch> mismatches;
    std::map<std::string, long> class_counts;

    const auto network_accepts = [&](const Word& w, std::string& o_str) {
        if (model.kind == ModelKind::SimpleRnnModel) {
            const Rational o = rnn_run(model.rnn, w).output;
            o_str = o.str();
            return model.acceptance.contains(o);
        }
        const BigFloat o = gru_run(model.gru, w).output;
        o_str = o.sci_str(3);
        return model.acceptance.contains(o);
    };

    if (oracle == OracleKind::DfaOracle) {
        Rng rng(seed);
        for (long trial = 0; trial < trials; ++trial) {
            const Word w = random_word(rng, dfa.alphabet.size(), max_len);
            const bool expect = run_dfa(dfa, w).accepted;
            class_counts[expect ? "accept" : "reject"]++;
            std::string o_str;
            const bool got = network_accepts(w, o_str);
            if (got != expect)
                mismatches.push_back({w, format_word(dfa.alphabet, w), "-", expect, got, o_str});
        }
    } else {
        const DyckSpec spec(n);
        const MembershipClass classes[3] = {MembershipClass::InDyck, MembershipClass::InPrefix,
                                            MembershipClass::Neither};
        WordGen gens[3] = {WordGen(spec, classes[0], max_len, seed),
                           WordGen(spec, classes[1], max_len, seed + 1),
                           WordGen(spec, classes[2], max_len, seed + 2)};
        for (long trial = 0; trial < trials; ++trial) {
            const int which = static_cast<int>(trial % 3);
            const Word w = gens[which].next();
            class_counts[membership_name(classes[which])]++;
            bool expect = classes[which] == MembershipClass::InDyck;
            if (oracle == OracleKind::Cfl)
                expect = expect && run_dfa(dfa, w).accepted;
            std::string o_str;
            const bool got = network_accepts(w, o_str);
            if (got != expect)
                mismatches.push_back({w, format_word(model.alphabet(), w),
                                      membership_name(classes[which]), expect, got, o_str});
        }
    }

    const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();

    std::sort(mismatches.begin(), mismatches.end(), [](const Mismatch& a, const Mismatch& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });

    if (as_json) {
        nlohmann::ordered_json j;
        j["trials"] = trials;
        j["seed"] = seed;
        j["max_len"] = max_len;
        j["class_counts"] = class_counts;
        nlohmann::ordered_json ms = nlohmann::ordered_json::array();
        for (const auto& m : mismatches) {
            ms.push_back({{"word", m.word_str},
                          {"class", m.cls},
                          {"oracle", m.oracle_accepts ? "accept" : "reject"},
                          {"network", m.network_accepts ? "accept" : "reject"},
                          {"o", m.o_str}});
        }
        j["mismatches"] = std::move(ms);
        j["elapsed_ms"] = elapsed_ms;
        j["pass"] = mismatches.empty();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "trials = " << trials << "\n";
        std::cout << "seed = " << seed << "\n";
        std::cout << "classes:";
        for (const auto& [name, count] : class_counts) std::cout << " " << name << "=" << count;
        std::cout << "\n";
        for (const auto& m : mismatches) {
            std::cout << "mismatch: word='" << m.word_str << "' class=" << m.cls
                      << " oracle=" << (m.oracle_accepts ? "accept" : "reject")
                      << " network=" << (m.network_accepts ? "accept" : "reject") << " o=" << m.o_str
                      << "\n";
        }
        std::cout << "mismatches = " << mismatches.size() << "\n";
        std::cout << (mismatches.empty() ? "PASS" : "FAIL") << "\n";
        std::cerr << "elapsed_ms = " << elapsed_ms << "\n";
    }
    return mismatches.empty() ? kExitOk : kExitMismatch;
}

int cmd_extract(const std::string& weights_path, unsigned int_bits, unsigned frac_bits,
                std::size_t max_states, const std::string& out_path, int compare_dyck) {
    const LoadedModel model = load_model(weights_path, 0);
    if (model.kind != ModelKind::SimpleRnnModel)
        throw ParseError("extraction is defined for simple_rnn weights");
    const Dfa dfa =
        extract_dfa(model.rnn, FixedPointFormat{int_bits, frac_bits}, model.acceptance, max_states);
    std::cout << "states = " << dfa.num_states() << "\n";

    if (compare_dyck > 0) {
        // Search order: every word up to length 8, then deep nests up to
        // length 20; report the first disagreement with the classifier.
        const DyckSpec spec(compare_dyck);
        if (!(model.alphabet() == dyck_alphabet(compare_dyck)))
            throw AlphabetMismatchError("weights alphabet does not match the Dyck alphabet");
        Word found;
        bool has_found = false;
        Word word;
        std::function<bool()> rec = [&]() {
            const bool dfa_ok = run_dfa(dfa, word).accepted;
            const bool should = classify(word, spec) == MembershipClass::InDyck;
            if (dfa_ok != should) {
                found = word;
                return true;
            }
            if (word.size() >= 8) return false;
            for (std::size_t x = 0; x < dfa.alphabet.size(); ++x) {
                word.push_back(static_cast<int>(x));
                if (rec()) return true;
                word.pop_back();
            }
            return false;
        };
        has_found = rec();
        for (int depth = 1; depth <= 10 && !has_found; ++depth) {
            Word w;
            for (int i = 0; i < depth; ++i) w.push_back(0);
            for (int i = 0; i < depth; ++i) w.push_back(compare_dyck);
            if (run_dfa(dfa, w).accepted != (classify(w, spec) == MembershipClass::InDyck)) {
                found = w;
                has_found = true;
            }
        }
        if (has_found)
            std::cout << "first_divergence = '" << format_word(model.alphabet(), found) << "'\n";
        else
            std::cout << "first_divergence = none within the searched words\n";
    }

    const std::string text = dfa_to_json(dfa);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"automata-to-recurrent-network compiler and simulator"};
    app.require_subcommand(1);

    // compile
    auto* compile = app.add_subcommand("compile", "build network weights from a spec");
    std::string kind, spec_path, out_path;
    int n = 2, k = 5;
    unsigned precision = 0;
    compile->add_option("kind", kind, "dfa-rnn|dyck-rnn|cfl-rnn|dfa-gru|dyck-gru|cfl-gru")
        ->required();
    compile->add_option("spec", spec_path, "DFA or CFL spec file (dfa-*/cfl-* kinds)");
    compile->add_option("--n", n, "parenthesis types for dyck-* kinds");
    compile->add_option("--k", k, "zero-padding exponent for gru kinds");
    compile->add_option("--precision", precision, "working precision in bits (0 = default)");
    compile->add_option("-o,--output", out_path, "output weights file (default stdout)");

    // run / trace
    auto* run = app.add_subcommand("run", "run a word through saved weights");
    auto* trace = app.add_subcommand("trace", "run and print the per-step table");
    std::string run_weights, trace_weights;
    std::vector<std::string> run_tokens, trace_tokens;
    unsigned run_precision = 0, trace_precision = 0;
    run->add_option("weights", run_weights)->required();
    run->add_option("word", run_tokens, "word tokens (may be one quoted string)");
    run->add_option("--precision", run_precision, "override the run precision in bits");
    trace->add_option("weights", trace_weights)->required();
    trace->add_option("word", trace_tokens, "word tokens (may be one quoted string)");
    trace->add_option("--precision", trace_precision, "override the run precision in bits");

    // verify
    auto* verify = app.add_subcommand("verify", "differential test against a language oracle");
    std::string verify_weights, verify_dfa, verify_cfl;
    int verify_dyck = 0, verify_max_len = 30;
    long verify_trials = 1000;
    std::uint64_t verify_seed = seed_default();
    bool verify_json = false;
    unsigned verify_precision = 0;
    verify->add_option("weights", verify_weights)->required();
    verify->add_option("--dyck", verify_dyck, "oracle: Dyck language with n types");
    verify->add_option("--dfa", verify_dfa, "oracle: DFA spec file");
    verify->add_option("--cfl", verify_cfl, "oracle: CFL spec file");
    verify->add_option("--trials", verify_trials);
    verify->add_option("--max-len", verify_max_len);
    verify->add_option("--seed", verify_seed, "default from SEED env var, else 0");
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--precision", verify_precision, "override the run precision in bits");

    // extract
    auto* extract = app.add_subcommand("extract", "recover a DFA from quantized weights");
    std::string extract_weights, extract_out;
    unsigned int_bits = 8, frac_bits = 8;
    std::size_t max_states = 100000;
    int compare_dyck = 0;
    extract->add_option("weights", extract_weights)->required();
    extract->add_option("--int-bits", int_bits);
    extract->add_option("--frac-bits", frac_bits);
    extract->add_option("--max-states", max_states);
    extract->add_option("-o,--output", extract_out, "output DFA file (default stdout)");
    extract->add_option("--compare-dyck", compare_dyck,
                        "search for the first divergence from the Dyck language with n types");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (compile->parsed()) return cmd_compile(kind, spec_path, n, k, precision, out_path);
    if (run->parsed() || trace->parsed()) {
        const bool tracing = trace->parsed();
        const LoadedModel model = load_model(tracing ? trace_weights : run_weights,
                                             tracing ? trace_precision : run_precision);
        const Word word =
            parse_word(model.alphabet(), join_tokens(tracing ? trace_tokens : run_tokens));
        const RunOutcome out = run_model(model, word);
        if (tracing) std::cout << out.trace_text;
        else std::cout << "o = " << out.o_str << " " << (out.accepted ? "ACCEPT" : "REJECT") << "\n";
        return kExitOk;
    }
    if (verify->parsed())
        return cmd_verify(verify_weights, verify_dyck, verify_dfa, verify_cfl, verify_trials,
                          verify_max_len, verify_seed, verify_json, verify_precision);
    if (extract->parsed())
        return cmd_extract(extract_weights, int_bits, frac_bits, max_states, extract_out,
                           compare_dyck);
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownSymbolError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const KTooSmallError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const GateDegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const BoundViolatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
