#include "apostol/families.hpp"

#include <map>
#include <sstream>

namespace apostol {

namespace {

using RatSeries = TruncSeries<Rat>;
using CycSeries = TruncSeries<CycQ>;
using LogSeries = TruncSeries<LogExpr>;

template <typename R>
std::vector<R> egf_values(const TruncSeries<R>& s, int max_n) {
    std::vector<R> out;
    out.reserve(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(s.egf(n));
    return out;
}

std::vector<LogExpr> embed_all(const std::vector<Rat>& v) {
    std::vector<LogExpr> out;
    out.reserve(v.size());
    for (const auto& r : v) out.emplace_back(r);
    return out;
}

std::vector<LogExpr> embed_all(const std::vector<CycQ>& v) {
    std::vector<LogExpr> out;
    out.reserve(v.size());
    for (const auto& c : v) out.emplace_back(c);
    return out;
}

}  // namespace

LogExpr log_of_lambda(const Rat& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("log_of_lambda: lambda = 0");
    return lambda.is_one() ? LogExpr(0) : LogExpr::sym_llambda();
}

LogExpr log_of_q(const Rat& q) {
    if (q.is_zero()) throw std::invalid_argument("log_of_q: q = 0");
    return q.is_one() ? LogExpr(0) : LogExpr::sym_lq();
}

FamilyId parse_family_id(const std::string& s) {
    static const std::map<std::string, FamilyId> ids = {
        {"bernoulli", FamilyId::Bernoulli},
        {"apostol_bernoulli", FamilyId::ApostolBernoulli},
        {"lambda_bernoulli", FamilyId::LambdaBernoulli},
        {"euler", FamilyId::Euler},
        {"apostol_euler", FamilyId::ApostolEuler},
        {"frobenius_euler", FamilyId::FrobeniusEuler},
        {"stirling1", FamilyId::Stirling1},
        {"stirling2", FamilyId::Stirling2},
        {"lambda_stirling2", FamilyId::LambdaStirling2},
        {"array_poly", FamilyId::ArrayPoly},
        {"bernoulli2nd", FamilyId::Bernoulli2nd},
        {"gen_bernoulli_chi", FamilyId::GenBernoulliChi},
        {"gen_euler_chi", FamilyId::GenEulerChi},
    };
    auto it = ids.find(s);
    if (it == ids.end()) throw std::invalid_argument("unknown family id: " + s);
    return it->second;
}

std::vector<Rat> apostol_bernoulli_poly(const Rat& x, const Rat& mu, int max_n) {
    int T = max_n + 1;
    RatSeries num = RatSeries::exp_t(x, T).shift_up(1);  // t e^{xt}
    RatSeries den = RatSeries::exp_t(Rat(1), T).scaled(mu);
    den.coeff_ref(0) -= Rat(1);
    return egf_values(div(num, den), max_n);
}

std::vector<Rat> apostol_euler_poly(const Rat& x, const Rat& mu, int max_n) {
    if (mu == Rat(-1))
        throw std::domain_error("apostol_euler_poly: pole at mu = -1 (generating function undefined at t = 0)");
    int T = max_n;
    RatSeries num = RatSeries::exp_t(x, T).scaled(Rat(2));
    RatSeries den = RatSeries::exp_t(Rat(1), T).scaled(mu);
    den.coeff_ref(0) += Rat(1);
    return egf_values(div(num, den), max_n);
}

std::vector<Rat> frobenius_euler_poly(const Rat& x, const Rat& u, int max_n) {
    if (u.is_one()) throw std::domain_error("frobenius_euler_poly: u = 1 is excluded");
    int T = max_n;
    RatSeries num = RatSeries::exp_t(x, T).scaled(Rat(1) - u);
    RatSeries den = RatSeries::exp_t(Rat(1), T);
    den.coeff_ref(0) -= u;
    return egf_values(div(num, den), max_n);
}

std::vector<Rat> bernoulli_second_kind(const Rat& x, int max_n) {
    int T = max_n + 1;
    RatSeries num = binomial_series(x, RatSeries::t(T)).shift_up(1);  // t (1+t)^x
    RatSeries den = log1p(RatSeries::t(T));
    return egf_values(div(num, den), max_n);
}

std::vector<Rat> cauchy_numbers(int max_n) { return bernoulli_second_kind(Rat(0), max_n); }

std::vector<std::vector<Rat>> stirling1_table(int N) {
    std::vector<std::vector<Rat>> s1(static_cast<size_t>(N) + 1,
                                     std::vector<Rat>(static_cast<size_t>(N) + 1, Rat(0)));
    RatSeries lg = log1p(RatSeries::t(N));
    RatSeries pw = RatSeries::one(N);
    Rat kfac(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            pw = pw * lg;
            kfac *= Rat(k);
        }
        RatSeries f = pw.scaled(kfac.inv());  // (log(1+t))^k / k!
        for (int n = 0; n <= N; ++n) s1[static_cast<size_t>(n)][static_cast<size_t>(k)] = f.egf(n);
    }
    return s1;
}

std::vector<std::vector<Rat>> stirling2_table(int N) {
    std::vector<std::vector<Rat>> s2(static_cast<size_t>(N) + 1,
                                     std::vector<Rat>(static_cast<size_t>(N) + 1, Rat(0)));
    RatSeries em1 = RatSeries::exp_t(Rat(1), N);
    em1.coeff_ref(0) -= Rat(1);
    RatSeries pw = RatSeries::one(N);
    Rat kfac(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            pw = pw * em1;
            kfac *= Rat(k);
        }
        RatSeries f = pw.scaled(kfac.inv());  // (e^t - 1)^k / k!
        for (int n = 0; n <= N; ++n) s2[static_cast<size_t>(n)][static_cast<size_t>(k)] = f.egf(n);
    }
    return s2;
}

std::vector<LogExpr> lambda_bernoulli_numbers(const Rat& lambda, int max_n) {
    // (log lambda + t) / (lambda e^t - 1); log lambda stays symbolic.
    int T = lambda.is_one() ? max_n + 1 : max_n;
    LogSeries num(T);
    num.coeff_ref(0) = log_of_lambda(lambda);
    if (T >= 1) num.coeff_ref(1) = LogExpr(1);
    LogSeries den = LogSeries::exp_t(LogExpr(1), T).scaled(LogExpr(lambda));
    den.coeff_ref(0) -= LogExpr(1);
    return egf_values(div(num, den), max_n);
}

std::vector<CycQ> gen_chi_decomposition(ChiKind kind, const DirichletChar& chi, const Rat& lambda,
                                        int max_n) {
    long d = chi.modulus;
    Rat mu = lambda.pow(d);
    std::vector<CycQ> out(static_cast<size_t>(max_n) + 1, CycQ(0));
    for (long j = 0; j < d; ++j) {
        if (chi(j).is_zero()) continue;
        Rat x(j, d);
        std::vector<Rat> poly = kind == ChiKind::Bernoulli ? apostol_bernoulli_poly(x, mu, max_n)
                                                           : apostol_euler_poly(x, mu, max_n);
        CycQ w = chi(j) * CycQ(lambda.pow(j));
        for (int n = 0; n <= max_n; ++n)
            out[static_cast<size_t>(n)] += w * CycQ(poly[static_cast<size_t>(n)]);
    }
    Rat dn(1, d);
    for (int n = 0; n <= max_n; ++n) {
        // d^{n-1} for the Bernoulli kind, d^n for the Euler kind
        Rat scale = kind == ChiKind::Bernoulli ? dn : dn * Rat(d);
        out[static_cast<size_t>(n)] *= CycQ(scale);
        dn *= Rat(d);
    }
    return out;
}

std::vector<CycQ> gen_euler_chi_signed(const DirichletChar& chi, const Rat& mu, int max_n) {
    long d = chi.modulus;
    Rat mud = mu.pow(d);
    std::vector<CycQ> out(static_cast<size_t>(max_n) + 1, CycQ(0));
    for (long j = 0; j < d; ++j) {
        if (chi(j).is_zero()) continue;
        std::vector<Rat> poly = apostol_euler_poly(Rat(j, d), mud, max_n);
        CycQ w = chi(j) * CycQ(mu.pow(j) * Rat(j % 2 == 0 ? 1 : -1));
        for (int n = 0; n <= max_n; ++n)
            out[static_cast<size_t>(n)] += w * CycQ(poly[static_cast<size_t>(n)]);
    }
    Rat dn(1);
    for (int n = 0; n <= max_n; ++n) {
        out[static_cast<size_t>(n)] *= CycQ(dn);
        dn *= Rat(d);
    }
    return out;
}

std::vector<LogExpr> gen_chi_values(ChiKind kind, const DirichletChar& chi, const Rat& lambda,
                                    int max_n) {
    if (lambda.is_zero()) throw std::invalid_argument("gen_chi_values: lambda = 0");
    long d = chi.modulus;
    Rat mu = lambda.pow(d);
    if (kind == ChiKind::Euler && mu == Rat(-1))
        throw std::domain_error("gen_chi_values: pole at t = 0, lambda^d = -1");

    int T = max_n + 1;
    CycSeries num(T), den(T);
    for (long j = 0; j < d; ++j) {
        if (chi(j).is_zero()) continue;
        CycSeries e = CycSeries::exp_t(CycQ(Rat(j)), T);
        CycQ w = chi(j) * CycQ(lambda.pow(j));
        for (int n = 0; n <= T; ++n) num.coeff_ref(n) += e.coeff(n) * w;
    }
    if (kind == ChiKind::Bernoulli) {
        num = num.shift_up(1);  // the explicit t factor of (GA)
        den = CycSeries::exp_t(CycQ(Rat(d)), T).scaled(CycQ(mu));
        den.coeff_ref(0) -= CycQ(1);
    } else {
        num = num.scaled(CycQ(2));
        den = CycSeries::exp_t(CycQ(Rat(d)), T).scaled(CycQ(mu));
        den.coeff_ref(0) += CycQ(1);
    }
    auto series_path = egf_values(div(num, den), max_n);
    auto decomposition = gen_chi_decomposition(kind, chi, lambda, max_n);
    for (int n = 0; n <= max_n; ++n) {
        if (!(series_path[static_cast<size_t>(n)] == decomposition[static_cast<size_t>(n)])) {
            std::ostringstream os;
            os << "gen_chi_values: series path and conductor decomposition disagree at n=" << n
               << " (chi=" << chi.spec << ", lambda=" << lambda.str() << ")";
            throw std::logic_error(os.str());
        }
    }
    return embed_all(series_path);
}

std::vector<LogExpr> family_values(const FamilySpec& spec, int max_n) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("family_values: ") + what);
    };
    Rat x = spec.x.value_or(Rat(0));
    switch (spec.id) {
        case FamilyId::Bernoulli:
            return embed_all(apostol_bernoulli_poly(x, Rat(1), max_n));
        case FamilyId::ApostolBernoulli:
            need(spec.lambda.has_value() && !spec.lambda->is_zero(), "apostol_bernoulli needs lambda != 0");
            return embed_all(apostol_bernoulli_poly(x, *spec.lambda, max_n));
        case FamilyId::LambdaBernoulli: {
            need(spec.lambda.has_value() && !spec.lambda->is_zero(), "lambda_bernoulli needs lambda != 0");
            need(!spec.x.has_value() || spec.x->is_zero(), "lambda_bernoulli is a number family");
            return lambda_bernoulli_numbers(*spec.lambda, max_n);
        }
        case FamilyId::Euler:
            return embed_all(apostol_euler_poly(x, Rat(1), max_n));
        case FamilyId::ApostolEuler:
            need(spec.lambda.has_value() && !spec.lambda->is_zero(), "apostol_euler needs lambda != 0");
            return embed_all(apostol_euler_poly(x, *spec.lambda, max_n));
        case FamilyId::FrobeniusEuler:
            need(spec.u.has_value(), "frobenius_euler needs u");
            return embed_all(frobenius_euler_poly(x, *spec.u, max_n));
        case FamilyId::Stirling1: {
            need(spec.v.has_value() && *spec.v >= 0, "stirling1 needs v >= 0");
            auto tbl = stirling1_table(max_n);
            std::vector<Rat> col(static_cast<size_t>(max_n) + 1, Rat(0));
            for (int n = 0; n <= max_n; ++n)
                if (*spec.v <= max_n) col[static_cast<size_t>(n)] = tbl[static_cast<size_t>(n)][static_cast<size_t>(*spec.v)];
            return embed_all(col);
        }
        case FamilyId::Stirling2:
        case FamilyId::LambdaStirling2:
        case FamilyId::ArrayPoly: {
            need(spec.v.has_value() && *spec.v >= 0, "family needs v >= 0");
            Rat lambda = spec.id == FamilyId::Stirling2 ? Rat(1) : spec.lambda.value_or(Rat(1));
            need(!lambda.is_zero(), "lambda != 0 required");
            long v = *spec.v;
            int T = max_n;
            RatSeries base = RatSeries::exp_t(Rat(1), T).scaled(lambda);
            base.coeff_ref(0) -= Rat(1);
            RatSeries pw = RatSeries::one(T);
            for (long k = 0; k < v; ++k) pw = pw * base;
            pw = pw.scaled(Rat(Int(1), factorial(v)));
            if (spec.id == FamilyId::ArrayPoly) pw = pw * RatSeries::exp_t(x, T);
            return embed_all(egf_values(pw, max_n));
        }
        case FamilyId::Bernoulli2nd: {
            // The table surface reports ordinary generating-function
            // coefficients of t(1+t)^x/log(1+t); the egf values stay internal.
            auto vals = bernoulli_second_kind(x, max_n);
            for (int n = 0; n <= max_n; ++n) vals[n] = vals[n] / Rat(factorial(n));
            return embed_all(vals);
        }
        case FamilyId::GenBernoulliChi:
        case FamilyId::GenEulerChi: {
            need(spec.chi.has_value(), "attached family needs a character");
            need(spec.lambda.has_value() && !spec.lambda->is_zero(), "attached family needs lambda != 0");
            return gen_chi_values(
                spec.id == FamilyId::GenBernoulliChi ? ChiKind::Bernoulli : ChiKind::Euler,
                *spec.chi, *spec.lambda, max_n);
        }
    }
    throw std::logic_error("family_values: unhandled family id");
}

}  // namespace apostol
