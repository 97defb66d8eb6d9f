#include "dycknet/gru.hpp"

#include <cmath>

#include "dycknet/elementary.hpp"

namespace dycknet {

OutputFunctional OutputFunctional::linear(Matrix<BigFloat> wo) {
    if (wo.rows() != 1) throw DimensionError("linear output needs a 1 x m row");
    return {Kind::Linear, std::move(wo)};
}

OutputFunctional OutputFunctional::dyck_readout() {
    return {Kind::DyckReadout, std::nullopt};
}

OutputFunctional OutputFunctional::dyck_plus_linear(Matrix<BigFloat> wo) {
    if (wo.rows() != 1) throw DimensionError("linear output needs a 1 x m row");
    return {Kind::DyckPlusLinear, std::move(wo)};
}

void Gru::validate() const {
    const std::size_t m = h0.size();
    if (m == 0) throw DimensionError("empty hidden state");
    const std::size_t ns = alphabet.size();
    if (Wz.rows() != m || Wz.cols() != ns) throw DimensionError("Wz shape");
    if (Wr.rows() != m || Wr.cols() != ns) throw DimensionError("Wr shape");
    if (Wh.rows() != m || Wh.cols() != ns) throw DimensionError("Wh shape");
    if (Uh.rows() != m || Uh.cols() != m) throw DimensionError("Uh shape");
    if (Ur.rows() != m || Ur.cols() != m) throw DimensionError("Ur shape");
    if (Uz.rows() != m || Uz.cols() != m) throw DimensionError("Uz shape");
    if (bz.size() != m || br.size() != m || bh.size() != m) throw DimensionError("bias size");
    if (output.kind != OutputFunctional::Kind::Linear && m < 8)
        throw DimensionError("DyckReadout needs at least 8 hidden nodes");
    if (output.kind != OutputFunctional::Kind::DyckReadout) {
        if (!output.Wo || output.Wo->cols() != m) throw DimensionError("Wo shape");
    }
}

namespace {

void check_symbol(const Gru& gru, int sym) {
    if (sym < 0 || static_cast<std::size_t>(sym) >= gru.alphabet.size())
        throw UnknownSymbolError("symbol index outside the network alphabet");
}

std::vector<ExtendedWeight> uz_row(const Gru& gru, std::size_t i) {
    std::vector<ExtendedWeight> row;
    row.reserve(gru.hidden_size());
    for (std::size_t j = 0; j < gru.hidden_size(); ++j) row.push_back(gru.Uz.at(i, j));
    return row;
}

} // namespace

GruStepResult gru_step(const Gru& gru, const std::vector<BigFloat>& h, int sym) {
    check_symbol(gru, sym);
    const std::size_t m = gru.hidden_size();
    if (h.size() != m) throw DimensionError("hidden state size mismatch");
    const unsigned p = gru.work_precision();
    const std::size_t x = static_cast<std::size_t>(sym);

    GruStepResult res{{}, {}, {}};
    res.z.reserve(m);
    res.r.reserve(m);
    res.h.reserve(m);

    for (std::size_t i = 0; i < m; ++i) {
        ExtendedValue acc = extended_dot(uz_row(gru, i), h, p);
        if (acc.kind == ExtendedValue::Kind::Finite)
            acc.value = (*acc.value + gru.Wz.at(i, x) + gru.bz[i]).round_to(p);
        res.z.push_back(sigmoid_extended(acc, p));
    }

    for (std::size_t i = 0; i < m; ++i) {
        BigFloat acc = (gru.Wr.at(i, x) + gru.br[i]).round_to(p);
        for (std::size_t j = 0; j < m; ++j)
            if (!gru.Ur.at(i, j).is_zero()) acc = acc + gru.Ur.at(i, j) * h[j];
        res.r.push_back(sigmoid(acc.round_to(p)));
    }

    std::vector<BigFloat> gated;
    gated.reserve(m);
    for (std::size_t j = 0; j < m; ++j) gated.push_back((res.r[j] * h[j]).round_to(p));

    const BigFloat one = BigFloat::from_long(1, p);
    for (std::size_t i = 0; i < m; ++i) {
        BigFloat acc = (gru.Wh.at(i, x) + gru.bh[i]).round_to(p);
        for (std::size_t j = 0; j < m; ++j)
            if (!gru.Uh.at(i, j).is_zero()) acc = acc + gru.Uh.at(i, j) * gated[j];
        const BigFloat cand = tanh_fn(acc.round_to(p));
        const BigFloat next = res.z[i] * h[i].round_to(p) + (one - res.z[i]) * cand;
        res.h.push_back(next.round_to(p));
    }
    return res;
}

BigFloat eval_output(const OutputFunctional& f, const std::vector<BigFloat>& h, unsigned prec) {
    BigFloat out(prec);
    if (f.kind != OutputFunctional::Kind::Linear) {
        if (h.size() < 8) throw DimensionError("DyckReadout needs at least 8 hidden nodes");
        if (h[1].is_zero()) throw DivisionByZeroError("DyckReadout scale component h_2 is zero");
        out = (abs_value(h[0]) / h[1] - h[3] - h[7] + BigFloat::from_long(2, prec)).round_to(prec);
    }
    if (f.kind != OutputFunctional::Kind::DyckReadout) {
        BigFloat lin(prec);
        for (std::size_t j = 0; j < h.size(); ++j)
            if (!f.Wo->at(0, j).is_zero()) lin = lin + f.Wo->at(0, j) * h[j];
        out = (out + lin).round_to(prec);
    }
    return out;
}

GruRunResult gru_run(const Gru& gru, const Word& word) {
    gru.validate();
    const unsigned pw = gru.work_precision();
    std::vector<BigFloat> h;
    h.reserve(gru.hidden_size());
    for (const auto& v : gru.h0) h.push_back(v.round_to(pw));

    const auto report = [&](const std::vector<BigFloat>& v) {
        std::vector<BigFloat> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(x.round_to(gru.precision));
        return out;
    };

    GruRunResult res{BigFloat(gru.precision), {}};
    res.trace.push_back(
        {0, -1, {}, {}, report(h), eval_output(gru.output, h, gru.precision)});
    int t = 0;
    for (const int sym : word) {
        GruStepResult step = gru_step(gru, h, sym);
        h = step.h;
        ++t;
        res.trace.push_back({t, sym, report(step.z), report(step.r), report(h),
                             eval_output(gru.output, h, gru.precision)});
    }
    res.output = res.trace.back().o;
    return res;
}

ErrorTrace compute_error_trace(const Gru& gru, const Word& word, const DyckSpec& spec, int k) {
    gru.validate();
    if (k < 1) throw DomainError("k must be positive");
    const MembershipClass cls = classify(word, spec);
    if (cls == MembershipClass::Neither)
        throw PreconditionError("error bound is stated for words in P_n u D_n");
    const std::size_t m = gru.hidden_size();
    const bool mirrored = m >= 8;
    const std::size_t h5_index = 4;

    const GruRunResult run = gru_run(gru, word);
    const StateTrace st = state_trace(word, spec);
    const StateTrace st_bar = state_trace_bar(word, spec);
    const Rational base(2 * spec.n + 1);
    const Rational bound = Rational(2) * Rational::pow(base, -2 * k + 7);

    // Compare at a widened precision so the check measures the run, not the
    // checker.
    const unsigned pw = gru.precision + 64;
    const Rational h10 = gru.h0[0].to_rational();
    const Rational h50 = mirrored ? gru.h0[h5_index].to_rational() : Rational(0);

    ErrorTrace tr{{}, {}, bound, true, -1};
    for (std::size_t t = 0; t < run.trace.size(); ++t) {
        const Rational scale = Rational::pow(base, k * static_cast<long>(t));
        const Rational offset = Rational::pow(base, st.closes[t] - st.opens[t]);
        const BigFloat expected1 =
            BigFloat::from_rational(h10 * offset + st.s[t], pw);
        const BigFloat eps1 =
            (BigFloat::from_rational(scale, pw) * run.trace[t].h[0].round_to(pw) - expected1)
                .round_to(pw);
        tr.eps1.push_back(eps1);
        bool violated = cmp_abs(eps1, BigFloat::from_rational(bound, pw)) >= 0;
        if (mirrored) {
            const BigFloat expected5 =
                BigFloat::from_rational(h50 * offset + st_bar.s[t], pw);
            const BigFloat eps5 =
                (BigFloat::from_rational(scale, pw) * run.trace[t].h[h5_index].round_to(pw) -
                 expected5)
                    .round_to(pw);
            tr.eps5.push_back(eps5);
            violated = violated || cmp_abs(eps5, BigFloat::from_rational(bound, pw)) >= 0;
        }
        if (violated && tr.ok) {
            tr.ok = false;
            tr.first_violation = static_cast<int>(t);
        }
    }
    return tr;
}

ErrorTrace check_error_bound(const Gru& gru, const Word& word, const DyckSpec& spec, int k) {
    ErrorTrace tr = compute_error_trace(gru, word, spec, k);
    if (!tr.ok)
        throw BoundViolatedError("state-tracking error exceeds 2(2n+1)^(-2k+7) at step " +
                                     std::to_string(tr.first_violation) +
                                     "; raise the working precision or check the construction",
                                 tr.first_violation);
    return tr;
}

unsigned required_precision(int n, int k, std::size_t max_len) {
    if (n < 1 || k < 1) throw DomainError("required_precision needs positive n and k");
    const double lg = std::log2(static_cast<double>(2 * n + 1));
    const double a = std::ceil(static_cast<double>(2 * k + 4) * lg);
    const double b = std::ceil(std::log2(static_cast<double>(max_len) + 1.0));
    return static_cast<unsigned>(a) + static_cast<unsigned>(b) + 32u;
}

void check_k_sufficient(int n, int k) {
    if (n < 1) throw DomainError("n must be positive");
    if (k < 2)
        throw KTooSmallError("k = " + std::to_string(k) +
                             " leaves (2n+1)^(1-k) outside sigmoid_inv's domain");
    const Rational base(2 * n + 1);
    const Rational inv = Rational(1) / base;
    const Rational tail7 = Rational::pow(base, -2 * k + 7);
    const Rational tail8 = Rational::pow(base, -2 * k + 8);
    const Rational tail5 = Rational::pow(base, -2 * k + 5);
    const bool ok =
        // Balanced words: output interval ((2n+1)^(-2k+7), 5(2n+1)^(-2k+7))
        // must sit inside (0, (2n+1)^-1).
        Rational(5) * tail7 < inv &&
        // Proper prefixes: minimum state 2(2n+1)^-1 minus the tracking error
        // must clear the threshold.
        Rational(2) * inv - Rational(2) * tail7 > inv &&
        // First wrong closer, i > j: the negative overshoot must clear it.
        Rational(1) - Rational(5) * tail8 - tail5 > inv &&
        // First wrong closer, i < j: the positive overshoot must clear it.
        Rational(2) - Rational(2) * tail8 > inv;
    if (!ok)
        throw KTooSmallError("k = " + std::to_string(k) + " fails the acceptance-case inequalities for n = " +
                             std::to_string(n));
}

} // namespace dycknet
