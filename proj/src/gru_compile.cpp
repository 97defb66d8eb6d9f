#include "dycknet/gru_compile.hpp"

#include "dycknet/elementary.hpp"

namespace dycknet {

namespace {

constexpr unsigned kWeightGuardBits = 64;

Matrix<BigFloat> zero_matrix(std::size_t r, std::size_t c, unsigned prec) {
    return Matrix<BigFloat>(r, c, BigFloat(prec));
}

Matrix<ExtendedWeight> zero_extended(std::size_t r, std::size_t c, unsigned prec) {
    return Matrix<ExtendedWeight>(r, c, ExtendedWeight::finite(BigFloat(prec)));
}

std::vector<BigFloat> zero_vector(std::size_t m, unsigned prec) {
    return std::vector<BigFloat>(m, BigFloat(prec));
}

} // namespace

StateEmbedding make_state_embedding(std::size_t num_states, std::size_t num_symbols) {
    if (num_states == 0 || num_symbols == 0) throw DomainError("empty embedding");
    StateEmbedding emb{num_states, num_symbols, {}};
    const std::size_t dim = emb.dim();
    const Rational quarter(1, 4);
    for (std::size_t i = 0; i < num_states; ++i) {
        std::vector<Rational> v(dim, Rational(0));
        for (std::size_t j = 0; j < num_symbols; ++j) v[i * num_symbols + j] = quarter;
        emb.s.push_back(std::move(v));
    }
    return emb;
}

CompiledDfaGru compile_dfa_to_gru(const Dfa& dfa, unsigned precision) {
    dfa.validate();
    const std::size_t nq = dfa.num_states();
    const std::size_t ns = dfa.alphabet.size();
    const std::size_t dim = nq * ns;
    const unsigned pb = precision + kWeightGuardBits;

    StateEmbedding emb = make_state_embedding(nq, ns);

    // Reset gate targets: 0.8 on the (mod |Sigma|) diagonal, 0.4 elsewhere.
    const Rational r_diag(4, 5);
    const Rational r_off(2, 5);
    Matrix<BigFloat> wr = zero_matrix(dim, ns, pb);
    for (std::size_t kk = 0; kk < dim; ++kk)
        for (std::size_t j = 0; j < ns; ++j) {
            const Rational& r = (kk % ns == j % ns) ? r_diag : r_off;
            wr.at(kk, j) = sigmoid_inv_q(r, pb);
        }

    // U_h C = B. C is exact: c_{k,(i,j)} = r_{k,j} s_{i,k}; its block
    // diagonal has blocks 0.25*[0.8/0.4] so det(C) = 0.1^N (|Sigma|+1)^|Q|.
    Matrix<Rational> c_exact(dim, dim, Rational(0));
    Matrix<BigFloat> b(dim, dim, BigFloat(pb));
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j < ns; ++j) {
            const std::size_t col = i * ns + j;
            const std::size_t target = static_cast<std::size_t>(dfa.delta[i][j]);
            for (std::size_t kk = 0; kk < dim; ++kk) {
                const Rational& r = (kk % ns == j % ns) ? r_diag : r_off;
                c_exact.at(kk, col) = r * emb.s[i][kk];
                const Rational arg = Rational(2) * emb.s[target][kk] - emb.s[i][kk];
                b.at(kk, col) = tanh_inv_q(arg, pb);
            }
        }

    const Matrix<Rational> c_inv = mat_inverse(c_exact);
    Matrix<BigFloat> c_inv_f = zero_matrix(dim, dim, pb);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            c_inv_f.at(i, j) = BigFloat::from_rational(c_inv.at(i, j), pb);
    Matrix<BigFloat> uh = b * c_inv_f;

    // The embedding vectors have disjoint support, so a direct row realizes
    // W_o s_i = [g(i) not accepting]: weight 4/|Sigma| across block i.
    Matrix<BigFloat> wo = zero_matrix(1, dim, pb);
    const Rational wo_entry = Rational(4) / Rational(static_cast<long>(ns));
    for (std::size_t i = 0; i < nq; ++i) {
        if (dfa.accepting[i]) continue;
        for (std::size_t j = 0; j < ns; ++j)
            wo.at(0, i * ns + j) = BigFloat::from_rational(wo_entry, pb);
    }

    std::vector<BigFloat> h0;
    h0.reserve(dim);
    for (std::size_t kk = 0; kk < dim; ++kk)
        h0.push_back(BigFloat::from_rational(emb.s[static_cast<std::size_t>(dfa.initial)][kk], pb));

    Gru gru{dfa.alphabet,
            zero_matrix(dim, ns, pb),
            std::move(wr),
            zero_matrix(dim, ns, pb),
            std::move(uh),
            zero_matrix(dim, dim, pb),
            zero_extended(dim, dim, pb),
            zero_vector(dim, pb),
            zero_vector(dim, pb),
            zero_vector(dim, pb),
            std::move(h0),
            OutputFunctional::linear(std::move(wo)),
            precision};
    gru.validate();
    return {std::move(gru), AcceptanceSet::open_interval(Rational(-1, 65536), Rational(1, 65536)),
            std::move(emb)};
}

DecodeResult decode_state(const std::vector<BigFloat>& h, const StateEmbedding& emb,
                          const Rational& tol) {
    if (h.size() != emb.dim()) throw DimensionError("hidden state size does not match embedding");
    const unsigned p = h[0].precision();
    std::vector<BigFloat> residuals;
    residuals.reserve(emb.num_states);
    for (std::size_t i = 0; i < emb.num_states; ++i) {
        BigFloat res(p);
        for (std::size_t kk = 0; kk < emb.dim(); ++kk) {
            const BigFloat d = abs_value(h[kk] - BigFloat::from_rational(emb.s[i][kk], p));
            if (d > res) res = d;
        }
        residuals.push_back(std::move(res));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < residuals.size(); ++i)
        if (residuals[i] < residuals[best]) best = i;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        if (i == best) continue;
        if ((residuals[i] - residuals[best]).cmp(tol) < 0)
            throw AmbiguousDecodeError("two embedding vectors fit within the decode tolerance");
    }
    return {static_cast<int>(best), residuals[best]};
}

CompiledGru build_dyck_gru(const DyckSpec& spec, int k, unsigned precision) {
    check_k_sufficient(spec.n, k);
    if (precision < required_precision(spec.n, k, 1))
        throw DomainError("precision below required_precision(n, k, 1)");
    const int n = spec.n;
    const Rational base(2 * n + 1);
    const unsigned pb = precision + kWeightGuardBits;
    const std::size_t m = 8;
    const std::size_t ns = static_cast<std::size_t>(2 * n);

    const BigFloat z_open = sigmoid_inv_q(Rational::pow(base, -1 - k), pb);
    const BigFloat z_close = sigmoid_inv_q(Rational::pow(base, 1 - k), pb);
    const BigFloat z_decay = sigmoid_inv_q(Rational::pow(base, -k), pb);

    Matrix<BigFloat> wz = zero_matrix(m, ns, pb);
    for (std::size_t x = 0; x < ns; ++x) {
        const bool open = x < static_cast<std::size_t>(n);
        for (const std::size_t row : {std::size_t{0}, std::size_t{4}})
            wz.at(row, x) = open ? z_open : z_close;
        for (const std::size_t row : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{6}})
            wz.at(row, x) = z_decay;
    }

    // Reset-gate columns: row 2 drives the s' tracker, row 6 the mirrored
    // tracker (type i read as type n+1-i).
    const Rational half(1, 2);
    const Rational open_den = Rational::pow(base, k + 1) - Rational(1);
    const Rational close_den = Rational::pow(base, k) - base;
    Matrix<BigFloat> wr = zero_matrix(m, ns, pb);
    for (int i = 1; i <= n; ++i) {
        const std::size_t open = static_cast<std::size_t>(i - 1);
        const std::size_t close = static_cast<std::size_t>(n + i - 1);
        const int mi = n + 1 - i;
        wr.at(2, open) = sigmoid_inv_q(half - Rational(2 * i) / open_den, pb);
        wr.at(2, close) = sigmoid_inv_q(half + Rational(2 * i) / close_den, pb);
        wr.at(6, open) = sigmoid_inv_q(half - Rational(2 * mi) / open_den, pb);
        wr.at(6, close) = sigmoid_inv_q(half + Rational(2 * mi) / close_den, pb);
    }

    Matrix<BigFloat> uh = zero_matrix(m, m, pb);
    uh.at(0, 1) = BigFloat::from_long(1, pb);
    uh.at(0, 2) = BigFloat::from_long(-1, pb);
    uh.at(4, 5) = BigFloat::from_long(1, pb);
    uh.at(4, 6) = BigFloat::from_long(-1, pb);

    Matrix<ExtendedWeight> uz = zero_extended(m, m, pb);
    uz.at(3, 0) = ExtendedWeight::plus_inf();
    uz.at(7, 4) = ExtendedWeight::plus_inf();

    const Rational h1 = Rational(3) * Rational::pow(base, -2 * k + 7);
    std::vector<BigFloat> h0;
    for (const Rational& v : {h1, Rational(1), Rational(1), Rational(1), h1, Rational(1), Rational(1), Rational(1)})
        h0.push_back(BigFloat::from_rational(v, pb));

    Gru gru{dyck_alphabet(n),
            std::move(wz),
            std::move(wr),
            zero_matrix(m, ns, pb),
            std::move(uh),
            zero_matrix(m, m, pb),
            std::move(uz),
            zero_vector(m, pb),
            zero_vector(m, pb),
            zero_vector(m, pb),
            std::move(h0),
            OutputFunctional::dyck_readout(),
            precision};
    gru.validate();
    return {std::move(gru), AcceptanceSet::open_interval(Rational(0), Rational(1) / base)};
}

Gru build_dyck_tracker_gru(const DyckSpec& spec, int k, unsigned precision, const Rational& h10) {
    if (k < 2) throw KTooSmallError("tracker needs k >= 2 for the gate values to stay in (0, 1)");
    if (h10.sign() < 0) throw DomainError("h10 must be nonnegative");
    const int n = spec.n;
    const Rational base(2 * n + 1);
    const unsigned pb = precision + kWeightGuardBits;
    const std::size_t m = 3;
    const std::size_t ns = static_cast<std::size_t>(2 * n);

    const BigFloat z_open = sigmoid_inv_q(Rational::pow(base, -1 - k), pb);
    const BigFloat z_close = sigmoid_inv_q(Rational::pow(base, 1 - k), pb);
    const BigFloat z_decay = sigmoid_inv_q(Rational::pow(base, -k), pb);

    Matrix<BigFloat> wz = zero_matrix(m, ns, pb);
    Matrix<BigFloat> wr = zero_matrix(m, ns, pb);
    const Rational half(1, 2);
    const Rational open_den = Rational::pow(base, k + 1) - Rational(1);
    const Rational close_den = Rational::pow(base, k) - base;
    for (int i = 1; i <= n; ++i) {
        const std::size_t open = static_cast<std::size_t>(i - 1);
        const std::size_t close = static_cast<std::size_t>(n + i - 1);
        wz.at(0, open) = z_open;
        wz.at(0, close) = z_close;
        wz.at(1, open) = z_decay;
        wz.at(1, close) = z_decay;
        wz.at(2, open) = z_decay;
        wz.at(2, close) = z_decay;
        wr.at(2, open) = sigmoid_inv_q(half - Rational(2 * i) / open_den, pb);
        wr.at(2, close) = sigmoid_inv_q(half + Rational(2 * i) / close_den, pb);
    }

    Matrix<BigFloat> uh = zero_matrix(m, m, pb);
    uh.at(0, 1) = BigFloat::from_long(1, pb);
    uh.at(0, 2) = BigFloat::from_long(-1, pb);

    Matrix<BigFloat> wo = zero_matrix(1, m, pb);
    wo.at(0, 0) = BigFloat::from_long(1, pb);

    std::vector<BigFloat> h0;
    for (const Rational& v : {h10, Rational(1), Rational(1)})
        h0.push_back(BigFloat::from_rational(v, pb));

    Gru gru{dyck_alphabet(n),
            std::move(wz),
            std::move(wr),
            zero_matrix(m, ns, pb),
            std::move(uh),
            zero_matrix(m, m, pb),
            zero_extended(m, m, pb),
            zero_vector(m, pb),
            zero_vector(m, pb),
            zero_vector(m, pb),
            std::move(h0),
            OutputFunctional::linear(std::move(wo)),
            precision};
    gru.validate();
    return gru;
}

CompiledGru compose_cfl_gru(const Gru& dyck_gru, const Gru& dfa_gru) {
    dyck_gru.validate();
    dfa_gru.validate();
    if (!(dyck_gru.alphabet == dfa_gru.alphabet))
        throw AlphabetMismatchError("composed networks must share one alphabet");
    if (dyck_gru.hidden_size() != 8 || dyck_gru.output.kind != OutputFunctional::Kind::DyckReadout)
        throw PreconditionError("first component must be the 8-node Dyck GRU");
    if (dfa_gru.output.kind != OutputFunctional::Kind::Linear)
        throw PreconditionError("regular component must have a linear output");
    if (dyck_gru.alphabet.size() % 2 != 0) throw AlphabetMismatchError("Dyck alphabet size must be even");

    const std::size_t m1 = 8;
    const std::size_t m2 = dfa_gru.hidden_size();
    const std::size_t m = m1 + m2;
    const std::size_t ns = dyck_gru.alphabet.size();
    const unsigned p = std::max(dyck_gru.precision, dfa_gru.precision);
    const unsigned pb = p + kWeightGuardBits;

    Gru gru{dyck_gru.alphabet,
            zero_matrix(m, ns, pb),
            zero_matrix(m, ns, pb),
            zero_matrix(m, ns, pb),
            zero_matrix(m, m, pb),
            zero_matrix(m, m, pb),
            zero_extended(m, m, pb),
            zero_vector(m, pb),
            zero_vector(m, pb),
            zero_vector(m, pb),
            zero_vector(m, pb),
            OutputFunctional::dyck_readout(), // replaced below
            p};

    const auto copy_block = [&](const Gru& src, std::size_t off) {
        const std::size_t mm = src.hidden_size();
        for (std::size_t i = 0; i < mm; ++i) {
            for (std::size_t x = 0; x < ns; ++x) {
                gru.Wz.at(off + i, x) = src.Wz.at(i, x);
                gru.Wr.at(off + i, x) = src.Wr.at(i, x);
                gru.Wh.at(off + i, x) = src.Wh.at(i, x);
            }
            for (std::size_t j = 0; j < mm; ++j) {
                gru.Uh.at(off + i, off + j) = src.Uh.at(i, j);
                gru.Ur.at(off + i, off + j) = src.Ur.at(i, j);
                gru.Uz.at(off + i, off + j) = src.Uz.at(i, j);
            }
            gru.bz[off + i] = src.bz[i];
            gru.br[off + i] = src.br[i];
            gru.bh[off + i] = src.bh[i];
            gru.h0[off + i] = src.h0[i];
        }
    };
    copy_block(dyck_gru, 0);
    copy_block(dfa_gru, m1);

    Matrix<BigFloat> wo = zero_matrix(1, m, pb);
    for (std::size_t j = 0; j < m2; ++j) wo.at(0, m1 + j) = dfa_gru.output.Wo->at(0, j);
    gru.output = OutputFunctional::dyck_plus_linear(std::move(wo));

    gru.validate();
    const long n = static_cast<long>(ns / 2);
    return {std::move(gru),
            AcceptanceSet::open_interval(Rational(0), Rational(1, 2 * n + 1))};
}

CompiledGru compile_cfl_gru(const CflSpec& spec, int k, unsigned precision) {
    spec.validate();
    CompiledGru dyck = build_dyck_gru(spec.dyck, k, precision);
    CompiledDfaGru dfa = compile_dfa_to_gru(spec.regular, precision);
    return compose_cfl_gru(dyck.gru, dfa.gru);
}

} // namespace dycknet
