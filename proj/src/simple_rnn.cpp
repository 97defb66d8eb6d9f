#include "dycknet/simple_rnn.hpp"

#include <deque>
#include <map>

namespace dycknet {

void SimpleRnn::validate() const {
    const std::size_t m = h0.size();
    if (m == 0) throw DimensionError("empty hidden state");
    if (Wx.rows() != m || Wx.cols() != alphabet.size()) throw DimensionError("Wx shape");
    if (Wh.rows() != m || Wh.cols() != m) throw DimensionError("Wh shape");
    if (bh.size() != m) throw DimensionError("bh size");
    if (Wo.rows() != 1 || Wo.cols() != m) throw DimensionError("Wo shape");
}

namespace {

Rational output_of(const SimpleRnn& rnn, const std::vector<Rational>& h) {
    Rational o = rnn.bo;
    for (std::size_t j = 0; j < h.size(); ++j) o += rnn.Wo.at(0, j) * h[j];
    return o;
}

void check_symbol(const SimpleRnn& rnn, int sym) {
    if (sym < 0 || static_cast<std::size_t>(sym) >= rnn.alphabet.size())
        throw UnknownSymbolError("symbol index outside the network alphabet");
}

std::vector<Rational> step_exact(const SimpleRnn& rnn, const std::vector<Rational>& h, int sym) {
    const std::size_t m = rnn.hidden_size();
    std::vector<Rational> next(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc = rnn.Wx.at(i, static_cast<std::size_t>(sym)) + rnn.bh[i];
        for (std::size_t j = 0; j < m; ++j) {
            if (!rnn.Wh.at(i, j).is_zero() && !h[j].is_zero()) acc += rnn.Wh.at(i, j) * h[j];
        }
        if (acc.sign() > 0) next[i] = std::move(acc);
    }
    return next;
}

} // namespace

std::vector<Rational> rnn_step(const SimpleRnn& rnn, const std::vector<Rational>& h, int sym) {
    check_symbol(rnn, sym);
    if (h.size() != rnn.hidden_size()) throw DimensionError("hidden state size mismatch");
    return step_exact(rnn, h, sym);
}

RnnRunResult rnn_run(const SimpleRnn& rnn, const Word& word) {
    rnn.validate();
    RnnRunResult res{Rational(0), {}};
    std::vector<Rational> h = rnn.h0;
    res.trace.push_back({0, -1, h, output_of(rnn, h)});
    int t = 0;
    for (const int sym : word) {
        check_symbol(rnn, sym);
        h = step_exact(rnn, h, sym);
        ++t;
        res.trace.push_back({t, sym, h, output_of(rnn, h)});
    }
    res.output = res.trace.back().o;
    return res;
}

bool rnn_accepts(const SimpleRnn& rnn, const AcceptanceSet& s, const Word& word) {
    return s.contains(rnn_run(rnn, word).output);
}

std::vector<FixedPoint> quantize_state(const std::vector<Rational>& h, FixedPointFormat fmt) {
    std::vector<FixedPoint> q;
    q.reserve(h.size());
    for (const auto& v : h) q.push_back(FixedPoint::quantize(v, fmt));
    return q;
}

namespace {

std::vector<Rational> dequantize(const std::vector<FixedPoint>& h) {
    std::vector<Rational> r;
    r.reserve(h.size());
    for (const auto& v : h) r.push_back(v.to_rational());
    return r;
}

} // namespace

std::vector<FixedPoint> rnn_step_quantized(const SimpleRnn& rnn,
                                           const std::vector<FixedPoint>& h, int sym) {
    check_symbol(rnn, sym);
    if (h.size() != rnn.hidden_size()) throw DimensionError("hidden state size mismatch");
    return quantize_state(step_exact(rnn, dequantize(h), sym), h[0].format());
}

RnnRunResult rnn_run_quantized(const SimpleRnn& rnn, const Word& word, FixedPointFormat fmt) {
    rnn.validate();
    RnnRunResult res{Rational(0), {}};
    std::vector<FixedPoint> h = quantize_state(rnn.h0, fmt);
    res.trace.push_back({0, -1, dequantize(h), output_of(rnn, dequantize(h))});
    int t = 0;
    for (const int sym : word) {
        check_symbol(rnn, sym);
        h = rnn_step_quantized(rnn, h, sym);
        ++t;
        res.trace.push_back({t, sym, dequantize(h), output_of(rnn, dequantize(h))});
    }
    res.output = res.trace.back().o;
    return res;
}

namespace {

std::string state_key(const std::vector<FixedPoint>& h) {
    std::string key;
    for (const auto& v : h) {
        key += v.stored().get_str();
        key += ',';
    }
    return key;
}

} // namespace

Dfa extract_dfa(const SimpleRnn& rnn, FixedPointFormat fmt, const AcceptanceSet& s,
                std::size_t max_states) {
    rnn.validate();
    if (max_states == 0) throw DomainError("max_states must be positive");

    std::map<std::string, int> ids;
    std::vector<std::vector<FixedPoint>> reps;
    std::deque<int> queue;

    const auto intern = [&](std::vector<FixedPoint> h) {
        const std::string key = state_key(h);
        const auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (reps.size() >= max_states)
            throw StateBudgetExceededError("reachable quantized state set exceeds " +
                                           std::to_string(max_states) + " states");
        const int id = static_cast<int>(reps.size());
        ids.emplace(key, id);
        reps.push_back(std::move(h));
        queue.push_back(id);
        return id;
    };

    intern(quantize_state(rnn.h0, fmt));

    std::vector<std::vector<int>> delta;
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        if (static_cast<std::size_t>(id) >= delta.size()) delta.resize(static_cast<std::size_t>(id) + 1);
        delta[static_cast<std::size_t>(id)].assign(rnn.alphabet.size(), -1);
        for (std::size_t x = 0; x < rnn.alphabet.size(); ++x) {
            // intern() may grow reps; copy the source state first.
            std::vector<FixedPoint> cur = reps[static_cast<std::size_t>(id)];
            const int to = intern(rnn_step_quantized(rnn, cur, static_cast<int>(x)));
            delta[static_cast<std::size_t>(id)][x] = to;
        }
    }

    Dfa dfa{rnn.alphabet, {}, 0, {}, {}};
    dfa.states.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) dfa.states.push_back("q" + std::to_string(i));
    dfa.accepting.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        dfa.accepting[i] = s.contains(output_of(rnn, dequantize(reps[i])));
    delta.resize(reps.size());
    dfa.delta = std::move(delta);
    dfa.validate();
    return dfa;
}

std::optional<std::size_t> one_hot_index(const std::vector<Rational>& h) {
    std::optional<std::size_t> hot;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].is_zero()) continue;
        if (h[i] != Rational(1) || hot.has_value()) return std::nullopt;
        hot = i;
    }
    return hot;
}

} // namespace dycknet
