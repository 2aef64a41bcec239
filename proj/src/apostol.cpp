#include "apostol/apostol.hpp"

#include <sstream>

namespace apostol {

namespace {

using LogSeries = TruncSeries<LogExpr>;

/// sum_j w^j (1 + lambda t)^j chi(j) as a polynomial series in t (degree < d).
LogSeries character_numerator(const DirichletChar& chi, const Rat& lambda, const Rat& w,
                              bool alternating, int T) {
    LogSeries num(T);
    long d = chi.modulus;
    for (long j = 0; j < d; ++j) {
        if (chi(j).is_zero()) continue;
        Rat wj = w.pow(j);
        if (alternating && j % 2 == 1) wj = -wj;
        CycQ coeff = chi(j) * CycQ(wj);
        // (1 + lambda t)^j expanded exactly
        for (long k = 0; k <= j && k <= T; ++k)
            num.coeff_ref(static_cast<int>(k)) +=
                LogExpr(coeff * CycQ(Rat(binomial_int(j, k)) * lambda.pow(k)));
    }
    return num;
}

/// (w (1 + lambda t))^d + c as a polynomial series in t.
LogSeries power_denominator(const Rat& w, const Rat& lambda, long d, const Rat& c, int T) {
    LogSeries den(T);
    Rat wd = w.pow(d);
    for (long k = 0; k <= d && k <= T; ++k)
        den.coeff_ref(static_cast<int>(k)) = LogExpr(wd * Rat(binomial_int(d, k)) * lambda.pow(k));
    den.coeff_ref(0) += LogExpr(c);
    return den;
}

std::vector<LogExpr> egf_values(const LogSeries& s, int max_n) {
    std::vector<LogExpr> out;
    out.reserve(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(s.egf(n));
    return out;
}

LogSeries log1p_lambda_t(const Rat& lambda, int T) {
    LogSeries lt(T);
    if (T >= 1) lt.coeff_ref(1) = LogExpr(lambda);
    return log1p(lt);
}

/// Binomial transfer: values of the polynomial family from the numbers,
/// sum_j binom(n,j) lambda^{n-j} (z)_{n-j} X_j.
std::vector<LogExpr> binomial_transfer(const std::vector<LogExpr>& numbers, const Rat& lambda,
                                       const Rat& z, int max_n) {
    std::vector<LogExpr> out(static_cast<size_t>(max_n) + 1, LogExpr(0));
    for (int n = 0; n <= max_n; ++n)
        for (int j = 0; j <= n; ++j)
            out[static_cast<size_t>(n)] +=
                LogExpr(Rat(binomial_int(n, j)) * lambda.pow(n - j) * falling_factorial(z, n - j)) *
                numbers[static_cast<size_t>(j)];
    return out;
}

}  // namespace

void DaeheeContext::validate() const {
    if (lambda.is_zero()) throw std::invalid_argument("DaeheeContext: lambda = 0");
    if (!q_limit_1) {
        if (q.is_zero() || q.is_one())
            throw std::invalid_argument("DaeheeContext: symbolic-q mode needs q not in {0, 1}");
    }
    Rat lq_eff = q_limit_1 ? lambda : lambda * q;
    if (lq_eff.pow(chi.modulus).is_one() && !lq_eff.is_one())
        throw std::domain_error("DaeheeContext: pole at t = 0, (lambda q)^d = 1");
    // (lambda q)^d = 1 with lambda q = 1 is the removable case handled by the
    // series quotient; it needs the numerator to vanish too, checked there.
}

LogExpr DaeheeContext::pref() const {
    if (q_limit_1) return LogExpr(1);
    return LogExpr(q - Rat(1)) / LogExpr::sym_lq();
}

LogExpr DaeheeContext::lq() const { return q_limit_1 ? LogExpr(0) : log_of_q(q); }

LogExpr DaeheeContext::llambda() const {
    if (!q_limit_1 && (lambda * q).is_one() && !lambda.is_one())
        return LogExpr(0) - LogExpr::sym_lq();
    return log_of_lambda(lambda);
}

void ChangheeContext::validate() const {
    if (lambda.is_zero()) throw std::invalid_argument("ChangheeContext: lambda = 0");
    if (q.is_zero()) throw std::invalid_argument("ChangheeContext: q = 0");
    if ((lambda * q).pow(chi.modulus) == Rat(-1))
        throw std::domain_error("ChangheeContext: pole at t = 0, (lambda q)^d = -1");
}

std::vector<LogExpr> daehee_numbers(const DaeheeContext& ctx, int max_n) {
    ctx.validate();
    if (max_n > ctx.T) throw std::out_of_range("daehee_numbers: max_n beyond truncation");
    int T = ctx.T + 1;
    Rat qe = ctx.q_limit_1 ? Rat(1) : ctx.q;
    Rat w = ctx.lambda * qe;

    // prefactor (q-1)(log lambda + log(1+lambda t) + log q)/log q,
    // with (q-1)/log q frozen to 1 in the q -> 1 mode.
    LogSeries head = log1p_lambda_t(ctx.lambda, T);
    head.coeff_ref(0) += ctx.llambda() + ctx.lq();
    head = head.scaled(ctx.pref());

    LogSeries num = head * character_numerator(ctx.chi, ctx.lambda, w, false, T);
    LogSeries den = power_denominator(w, ctx.lambda, ctx.chi.modulus, Rat(-1), T);
    if (den.coeff(0).is_zero() && num.order() < den.order())
        throw std::domain_error("daehee_numbers: pole at t = 0, (lambda q)^d = 1");
    return egf_values(div(num, den), max_n);
}

std::vector<LogExpr> daehee_polynomials(const DaeheeContext& ctx, const Rat& z, int max_n) {
    ctx.validate();
    if (max_n > ctx.T) throw std::out_of_range("daehee_polynomials: max_n beyond truncation");
    int T = ctx.T + 1;
    Rat qe = ctx.q_limit_1 ? Rat(1) : ctx.q;
    Rat w = ctx.lambda * qe;

    LogSeries head = log1p_lambda_t(ctx.lambda, T);
    head.coeff_ref(0) += ctx.llambda() + ctx.lq();
    head = head.scaled(ctx.pref());

    LogSeries lt(T);
    if (T >= 1) lt.coeff_ref(1) = LogExpr(ctx.lambda);
    LogSeries zfac = binomial_series(LogExpr(z), lt);  // (1 + lambda t)^z

    LogSeries num = head * character_numerator(ctx.chi, ctx.lambda, w, false, T) * zfac;
    LogSeries den = power_denominator(w, ctx.lambda, ctx.chi.modulus, Rat(-1), T);
    if (den.coeff(0).is_zero() && num.order() < den.order())
        throw std::domain_error("daehee_polynomials: pole at t = 0, (lambda q)^d = 1");
    return egf_values(div(num, den), max_n);
}

std::vector<LogExpr> daehee_closed_form(const DaeheeContext& ctx, int max_n, Variant variant) {
    ctx.validate();
    long d = ctx.chi.modulus;
    Rat qe = ctx.q_limit_1 ? Rat(1) : ctx.q;
    Rat w = ctx.lambda * qe;
    Rat wd = w.pow(d);

    auto s1 = stirling1_table(max_n + 1);
    auto cauchy = cauchy_numbers(max_n + 1);

    // C_l(j) = sum_{n<=l} d^n B_n(j/d; (lambda q)^d) S1(l, n), per unit j.
    std::vector<std::vector<Rat>> C(static_cast<size_t>(d));
    std::vector<CycQ> weight(static_cast<size_t>(d), CycQ(0));
    for (long j = 0; j < d; ++j) {
        if (ctx.chi(j).is_zero()) continue;
        weight[static_cast<size_t>(j)] = ctx.chi(j) * CycQ(w.pow(j));
        auto bp = apostol_bernoulli_poly(Rat(j, d), wd, max_n + 1);
        auto& Cj = C[static_cast<size_t>(j)];
        Cj.assign(static_cast<size_t>(max_n) + 2, Rat(0));
        for (int l = 0; l <= max_n + 1; ++l) {
            Rat dn(1);
            for (int n = 0; n <= l; ++n) {
                Cj[static_cast<size_t>(l)] += dn * bp[static_cast<size_t>(n)] *
                                              s1[static_cast<size_t>(l)][static_cast<size_t>(n)];
                dn *= Rat(d);
            }
        }
    }
    auto chi_sum_C = [&](int l) {
        CycQ acc(0);
        for (long j = 0; j < d; ++j) {
            if (weight[static_cast<size_t>(j)].is_zero()) continue;
            acc += weight[static_cast<size_t>(j)] * CycQ(C[static_cast<size_t>(j)][static_cast<size_t>(l)]);
        }
        return acc;
    };

    LogExpr pref = ctx.pref();
    LogExpr loglq = ctx.llambda() + ctx.lq();
    std::vector<LogExpr> out(static_cast<size_t>(max_n) + 1, LogExpr(0));

    if (variant == Variant::Corrected) {
        // D_m = pref*(Ll+Lq) * p_{m+1} / (d lambda (m+1)) + pref * lambda^m / d * chi_sum_C(m),
        // p_m = lambda^m sum_l binom(m,l) b_{m-l}(0) sum_j w^j chi(j) C_l(j).
        for (int m = 0; m <= max_n; ++m) {
            CycQ p(0);
            for (int l = 0; l <= m + 1; ++l)
                p += CycQ(Rat(binomial_int(m + 1, l)) * cauchy[static_cast<size_t>(m + 1 - l)]) *
                     chi_sum_C(l);
            LogExpr first = pref * loglq *
                            LogExpr(ctx.lambda.pow(m + 1) / (Rat(d) * ctx.lambda * Rat(m + 1))) *
                            LogExpr(p);
            LogExpr second = pref * LogExpr(ctx.lambda.pow(m) / Rat(d)) * LogExpr(chi_sum_C(m));
            out[static_cast<size_t>(m)] = first + second;
        }
        return out;
    }

    // As written: theorem (Da-2) for D_{m-1}, m >= 1 (and its q -> 1 corollary
    // in the limit mode): lambda exponent m+j-l-1, q^j weight in the first
    // term, no lambda^{m-1} in the second term.
    for (int mm = 0; mm <= max_n; ++mm) {
        int m = mm + 1;
        CycQ first_sum(0);
        for (long j = 0; j < d; ++j) {
            if (ctx.chi(j).is_zero()) continue;
            CycQ inner(0);
            for (int l = 0; l <= m; ++l)
                inner += CycQ(Rat(binomial_int(m, l)) * ctx.lambda.pow(m + j - l - 1) *
                              cauchy[static_cast<size_t>(m - l)] *
                              C[static_cast<size_t>(j)][static_cast<size_t>(l)] / Rat(d));
            first_sum += ctx.chi(j) * CycQ(qe.pow(j)) * inner;
        }
        CycQ second_sum(0);
        for (long j = 0; j < d; ++j) {
            if (ctx.chi(j).is_zero()) continue;
            Rat dn(1, d);
            Rat acc(0);
            auto bp = apostol_bernoulli_poly(Rat(j, d), wd, m);
            for (int n = 0; n <= m - 1; ++n) {
                acc += dn * bp[static_cast<size_t>(n)] *
                       s1[static_cast<size_t>(m - 1)][static_cast<size_t>(n)];
                dn *= Rat(d);
            }
            second_sum += ctx.chi(j) * CycQ(w.pow(j) * acc);
        }
        LogExpr first_pref =
            ctx.q_limit_1 ? ctx.llambda() * LogExpr(Rat(1, m))
                          : pref * ctx.llambda() * LogExpr(Rat(1, m)) + LogExpr((ctx.q - Rat(1)) / Rat(m));
        out[static_cast<size_t>(mm)] = first_pref * LogExpr(first_sum) + pref * LogExpr(second_sum);
    }
    return out;
}

std::vector<LogExpr> changhee_numbers(const ChangheeContext& ctx, int max_n) {
    ctx.validate();
    if (max_n > ctx.T) throw std::out_of_range("changhee_numbers: max_n beyond truncation");
    int T = ctx.T;
    Rat w = ctx.lambda * ctx.q;
    LogSeries num =
        character_numerator(ctx.chi, ctx.lambda, w, true, T).scaled(LogExpr(ctx.bracket2()));
    LogSeries den = power_denominator(w, ctx.lambda, ctx.chi.modulus, Rat(1), T);
    return egf_values(div(num, den), max_n);
}

std::vector<LogExpr> changhee_polynomials(const ChangheeContext& ctx, const Rat& z, int max_n) {
    ctx.validate();
    if (max_n > ctx.T) throw std::out_of_range("changhee_polynomials: max_n beyond truncation");
    int T = ctx.T;
    Rat w = ctx.lambda * ctx.q;
    LogSeries lt(T);
    if (T >= 1) lt.coeff_ref(1) = LogExpr(ctx.lambda);
    LogSeries num = character_numerator(ctx.chi, ctx.lambda, w, true, T) *
                    binomial_series(LogExpr(z), lt);
    num = num.scaled(LogExpr(ctx.bracket2()));
    LogSeries den = power_denominator(w, ctx.lambda, ctx.chi.modulus, Rat(1), T);
    return egf_values(div(num, den), max_n);
}

std::vector<LogExpr> changhee_closed_form(const ChangheeContext& ctx, int max_n, Variant variant) {
    ctx.validate();
    long d = ctx.chi.modulus;
    Rat w = ctx.lambda * ctx.q;
    auto s1 = stirling1_table(max_n);
    auto es = gen_euler_chi_signed(ctx.chi, w, max_n);  // d^n sum_j (-1)^j w^j chi(j) E_n(j/d; w^d)
    std::vector<LogExpr> out(static_cast<size_t>(max_n) + 1, LogExpr(0));

    if (variant == Variant::Corrected) {
        // Ch_m = ([2]/2) lambda^m sum_n Es_n S1(m, n).
        Rat half_b2 = ctx.bracket2() / Rat(2);
        for (int m = 0; m <= max_n; ++m) {
            CycQ acc(0);
            for (int n = 0; n <= m; ++n)
                acc += es[static_cast<size_t>(n)] *
                       CycQ(s1[static_cast<size_t>(m)][static_cast<size_t>(n)]);
            out[static_cast<size_t>(m)] = LogExpr(acc * CycQ(half_b2 * ctx.lambda.pow(m)));
        }
        return out;
    }

    // As written, theorem (F3-a): sum_j (-q)^j chi(j) sum_n lambda^{j+n} d^n
    // E_n(j/d; (lambda q)^d) S1(m, n).
    Rat wd = w.pow(d);
    for (int m = 0; m <= max_n; ++m) {
        CycQ acc(0);
        for (long j = 0; j < d; ++j) {
            if (ctx.chi(j).is_zero()) continue;
            auto ep = apostol_euler_poly(Rat(j, d), wd, m);
            Rat qj = ctx.q.pow(j) * Rat(j % 2 == 0 ? 1 : -1);
            Rat dn(1);
            Rat inner(0);
            for (int n = 0; n <= m; ++n) {
                inner += ctx.lambda.pow(j + n) * dn * ep[static_cast<size_t>(n)] *
                         s1[static_cast<size_t>(m)][static_cast<size_t>(n)];
                dn *= Rat(d);
            }
            acc += ctx.chi(j) * CycQ(qj * inner);
        }
        out[static_cast<size_t>(m)] = LogExpr(acc);
    }
    return out;
}

}  // namespace apostol
