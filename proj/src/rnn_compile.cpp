#include "dycknet/rnn_compile.hpp"

namespace dycknet {

void CflSpec::validate() const {
    regular.validate();
    if (!(regular.alphabet == dyck_alphabet(dyck.n)))
        throw AlphabetMismatchError("regular component must be relabeled onto the Dyck alphabet of n=" +
                                    std::to_string(dyck.n));
}

CompiledRnn compile_dfa_to_rnn(const Dfa& dfa) {
    dfa.validate();
    const std::size_t nq = dfa.num_states();
    const std::size_t ns = dfa.alphabet.size();
    const std::size_t m = nq * ns;
    const auto node = [nq](std::size_t sym, std::size_t state) { return sym * nq + state; };

    SimpleRnn rnn{dfa.alphabet,
                  Matrix<Rational>(m, ns, Rational(0)),
                  Matrix<Rational>(m, m, Rational(0)),
                  std::vector<Rational>(m, Rational(-1)),
                  Matrix<Rational>(1, m, Rational(0)),
                  Rational(0),
                  std::vector<Rational>(m, Rational(0))};

    for (std::size_t x = 0; x < ns; ++x)
        for (std::size_t q = 0; q < nq; ++q) {
            // One-hot input x feeds every node labeled (x, q).
            rnn.Wx.at(node(x, q), x) = Rational(1);
            // Previous hot node (x, q) feeds (x', delta(q, x')) for every x'.
            for (std::size_t xn = 0; xn < ns; ++xn) {
                const std::size_t qn = static_cast<std::size_t>(dfa.delta[q][xn]);
                rnn.Wh.at(node(xn, qn), node(x, q)) = Rational(1);
            }
            if (!dfa.accepting[q]) rnn.Wo.at(0, node(x, q)) = Rational(1);
        }

    rnn.h0[node(0, static_cast<std::size_t>(dfa.initial))] = Rational(1);
    rnn.validate();
    return {std::move(rnn), AcceptanceSet::exact_zero()};
}

CompiledRnn build_dyck_rnn(const DyckSpec& spec) {
    const int n = spec.n;
    const Rational base(2 * n + 1);
    const Rational inv_base = Rational(1) / base;
    const std::size_t m = 6;
    const std::size_t ns = static_cast<std::size_t>(2 * n);

    SimpleRnn rnn{dyck_alphabet(n),
                  Matrix<Rational>(m, ns, Rational(0)),
                  Matrix<Rational>(m, m, Rational(0)),
                  std::vector<Rational>(m, Rational(0)),
                  Matrix<Rational>(1, m, Rational(1)),
                  Rational(0),
                  std::vector<Rational>(m, Rational(0))};

    for (int i = 1; i <= n; ++i) {
        const std::size_t open = static_cast<std::size_t>(i - 1);
        const std::size_t close = static_cast<std::size_t>(n + i - 1);
        rnn.Wx.at(0, open) = Rational(2 * i) * inv_base;
        rnn.Wx.at(0, close) = -base;
        rnn.Wx.at(1, open) = -base;
        rnn.Wx.at(1, close) = Rational(-2 * i);
        rnn.Wx.at(2, close) = Rational(2 * i);
        rnn.Wx.at(4, open) = -base;
        rnn.Wx.at(4, close) = Rational(-2 * i - 1);
    }

    rnn.Wh.at(0, 0) = inv_base;
    rnn.Wh.at(0, 1) = inv_base;
    rnn.Wh.at(1, 0) = base;
    rnn.Wh.at(1, 1) = base;
    rnn.Wh.at(2, 0) = -base;
    rnn.Wh.at(2, 1) = -base;
    rnn.Wh.at(3, 2) = Rational(1);
    rnn.Wh.at(3, 3) = Rational(1);
    rnn.Wh.at(4, 0) = base;
    rnn.Wh.at(4, 1) = base;
    rnn.Wh.at(5, 4) = Rational(1);
    rnn.Wh.at(5, 5) = Rational(1);

    rnn.validate();
    return {std::move(rnn), AcceptanceSet::exact_zero()};
}

namespace {

void require_nonnegative_output(const SimpleRnn& rnn, const char* which) {
    if (rnn.bo.sign() < 0)
        throw PreconditionError(std::string(which) + " component has a negative output bias");
    for (std::size_t j = 0; j < rnn.Wo.cols(); ++j)
        if (rnn.Wo.at(0, j).sign() < 0)
            throw PreconditionError(std::string(which) +
                                    " component has negative output weights; composition needs nonnegative outputs");
}

} // namespace

CompiledRnn compose_cfl_rnn(const SimpleRnn& dyck_rnn, const SimpleRnn& dfa_rnn) {
    dyck_rnn.validate();
    dfa_rnn.validate();
    if (!(dyck_rnn.alphabet == dfa_rnn.alphabet))
        throw AlphabetMismatchError("composed networks must share one alphabet");
    require_nonnegative_output(dyck_rnn, "Dyck");
    require_nonnegative_output(dfa_rnn, "regular");

    const std::size_t m1 = dyck_rnn.hidden_size();
    const std::size_t m2 = dfa_rnn.hidden_size();
    const std::size_t m = m1 + m2;
    const std::size_t ns = dyck_rnn.alphabet.size();

    SimpleRnn rnn{dyck_rnn.alphabet,
                  Matrix<Rational>(m, ns, Rational(0)),
                  Matrix<Rational>(m, m, Rational(0)),
                  std::vector<Rational>(m, Rational(0)),
                  Matrix<Rational>(1, m, Rational(0)),
                  dyck_rnn.bo + dfa_rnn.bo,
                  std::vector<Rational>(m, Rational(0))};

    for (std::size_t i = 0; i < m1; ++i) {
        for (std::size_t x = 0; x < ns; ++x) rnn.Wx.at(i, x) = dyck_rnn.Wx.at(i, x);
        for (std::size_t j = 0; j < m1; ++j) rnn.Wh.at(i, j) = dyck_rnn.Wh.at(i, j);
        rnn.bh[i] = dyck_rnn.bh[i];
        rnn.Wo.at(0, i) = dyck_rnn.Wo.at(0, i);
        rnn.h0[i] = dyck_rnn.h0[i];
    }
    for (std::size_t i = 0; i < m2; ++i) {
        for (std::size_t x = 0; x < ns; ++x) rnn.Wx.at(m1 + i, x) = dfa_rnn.Wx.at(i, x);
        for (std::size_t j = 0; j < m2; ++j) rnn.Wh.at(m1 + i, m1 + j) = dfa_rnn.Wh.at(i, j);
        rnn.bh[m1 + i] = dfa_rnn.bh[i];
        rnn.Wo.at(0, m1 + i) = dfa_rnn.Wo.at(0, i);
        rnn.h0[m1 + i] = dfa_rnn.h0[i];
    }

    rnn.validate();
    return {std::move(rnn), AcceptanceSet::exact_zero()};
}

CompiledRnn compile_cfl_rnn(const CflSpec& spec) {
    spec.validate();
    CompiledRnn dyck = build_dyck_rnn(spec.dyck);
    CompiledRnn dfa = compile_dfa_to_rnn(spec.regular);
    return compose_cfl_rnn(dyck.rnn, dfa.rnn);
}

} // namespace dycknet
