#include "apostol/padic.hpp"

#include "apostol/apostol.hpp"

#include <algorithm>
#include <sstream>

namespace apostol {

namespace {

Int pow_int(long p, long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

long vp_int(const Int& n, long p) {
    if (n == 0) throw std::domain_error("padic_valuation of 0");
    Int m = n, q, r;
    long v = 0;
    for (;;) {
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(),
                       static_cast<unsigned long>(p));
        if (r != 0) return v;
        m = q;
        ++v;
    }
}

void check_budget(long p, int N) {
    double total = 1;
    for (int i = 0; i < N; ++i) total *= static_cast<double>(p);
    if (total > 1e6)
        throw std::domain_error("partial-sum budget exceeded (p^N > 10^6); use a smaller N");
}

long npow(long p, int N) {
    long r = 1;
    for (int i = 0; i < N; ++i) r *= p;
    return r;
}

}  // namespace

long padic_valuation(const Rat& r, long p) {
    if (r.is_zero()) throw std::domain_error("padic_valuation of 0");
    long v = 0;
    if (r.num() % p == 0) v = vp_int(r.num(), p);
    if (r.den() % p == 0) v -= vp_int(r.den(), p);
    return v;
}

bool QpNumber::is_zero_at_precision() const {
    return value.is_zero() || padic_valuation(value, p) >= prec;
}

long QpNumber::valuation() const {
    if (value.is_zero()) throw std::domain_error("QpNumber: valuation of zero");
    return padic_valuation(value, p);
}

Int QpNumber::unit(long digits) const {
    long v = valuation();
    Int pk = pow_int(p, digits);
    // value / p^v = a/b with p dividing neither a nor b
    Int a = value.num(), b = value.den();
    if (v > 0) a /= pow_int(p, v);
    if (v < 0) b /= pow_int(p, -v);
    Int binv;
    if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), pk.get_mpz_t()) == 0)
        throw std::domain_error("QpNumber: denominator not invertible mod p^k");
    Int u = (a % pk) * binv % pk;
    if (u < 0) u += pk;
    return u;
}

std::string QpNumber::str() const {
    std::ostringstream os;
    if (is_zero_at_precision()) {
        os << "O(" << p << "^" << prec << ")";
        return os.str();
    }
    long v = valuation();
    long digits = std::min<long>(prec - v, 12);
    os << p << "^" << v << " * (" << unit(digits).get_str() << " mod " << p << "^" << digits
       << ")";
    if (prec < kExactPrec) os << " + O(" << p << "^" << prec << ")";
    return os.str();
}

QpNumber qp_exact(long p, const Rat& v) { return {p, v, kExactPrec}; }
QpNumber qp_approx(long p, const Rat& v, long prec) { return {p, v, prec}; }

static void require_same_p(const QpNumber& a, const QpNumber& b) {
    if (a.p != b.p) throw std::invalid_argument("QpNumber: mixed primes");
}

QpNumber operator+(const QpNumber& a, const QpNumber& b) {
    require_same_p(a, b);
    return {a.p, a.value + b.value, std::min(a.prec, b.prec)};
}

QpNumber operator-(const QpNumber& a, const QpNumber& b) {
    require_same_p(a, b);
    return {a.p, a.value - b.value, std::min(a.prec, b.prec)};
}

QpNumber operator*(const QpNumber& a, const QpNumber& b) {
    require_same_p(a, b);
    long va = a.value.is_zero() ? a.prec : std::min(padic_valuation(a.value, a.p), a.prec);
    long vb = b.value.is_zero() ? b.prec : std::min(padic_valuation(b.value, b.p), b.prec);
    long prec = std::min(a.prec + vb, b.prec + va);
    return {a.p, a.value * b.value, std::min(prec, kExactPrec)};
}

QpNumber qp_inv(const QpNumber& a) {
    if (a.is_zero_at_precision())
        throw std::domain_error("QpNumber: inverting a value indistinguishable from zero");
    long va = a.valuation();
    long prec = a.prec >= kExactPrec ? kExactPrec : a.prec - 2 * va;
    return {a.p, a.value.inv(), prec};
}

QpNumber operator/(const QpNumber& a, const QpNumber& b) { return a * qp_inv(b); }

std::optional<long> qp_diff_valuation(const QpNumber& a, const QpNumber& b) {
    require_same_p(a, b);
    long prec = std::min(a.prec, b.prec);
    Rat d = a.value - b.value;
    if (d.is_zero()) return std::nullopt;
    long v = padic_valuation(d, a.p);
    if (v >= prec) return std::nullopt;
    return v;
}

QpNumber padic_log(const QpNumber& u, long prec_cap) {
    long p = u.p;
    if (p == 2) throw std::invalid_argument("padic_log: p must be odd");
    Rat w = u.value - Rat(1);
    long target = std::min(u.prec, prec_cap);
    if (w.is_zero()) return {p, Rat(0), target};
    long wv = padic_valuation(w, p);
    if (wv < 1) throw std::domain_error("padic_log: argument not congruent to 1 mod p");
    // term k has valuation k*wv - v_p(k) >= k - log_p(k); everything past
    // target + 64 is beyond the target precision
    long Kmax = target + 64;
    Rat acc(0), pw(1);
    for (long k = 1; k <= Kmax; ++k) {
        pw *= w;
        Rat term = pw / Rat(k);
        if (k % 2 == 0) term = -term;
        acc += term;
    }
    return {p, acc, target};
}

Rat IntegrandSpec::eval(long x) const {
    switch (kind) {
        case Kind::Monomial:
            return Rat(x).pow(n);
        case Kind::ShiftedMonomial:
            return (z + Rat(x)).pow(n);
        case Kind::Binomial:
            return binomial_rat(Rat(x), j);
        case Kind::FallingLambdaChi: {
            if (!chi.is_real())
                throw std::invalid_argument("IntegrandSpec: character must be real");
            Rat c = chi.real_value(x);
            if (c.is_zero()) return Rat(0);
            return falling_factorial(Rat(x), n) * lambda.pow(x + n) * c;
        }
    }
    throw std::logic_error("IntegrandSpec: bad kind");
}

Rat qvolkenborn_sum(long p, int N, const Rat& q, const std::function<Rat(long)>& f) {
    check_budget(p, N);
    long M = npow(p, N);
    Rat acc(0), qx(1);
    for (long x = 0; x < M; ++x) {
        Rat v = f(x);
        if (!v.is_zero()) acc += v * qx;
        qx *= q;
    }
    // [p^N]_q = (1 - q^(p^N)) / (1 - q), = p^N at q = 1
    Rat bracket = q.is_one() ? Rat(M) : (Rat(1) - q.pow(M)) / (Rat(1) - q);
    return acc / bracket;
}

Rat fermionic_sum(long p, int N, const Rat& q, const std::function<Rat(long)>& f) {
    check_budget(p, N);
    if (p == 2) throw std::invalid_argument("fermionic sums need odd p");
    long M = npow(p, N);
    Rat acc(0), w(1);
    for (long x = 0; x < M; ++x) {
        Rat v = f(x);
        if (!v.is_zero()) acc += v * w;
        w *= -q;
    }
    if (q.is_one()) return acc;
    return acc * (Rat(1) + q) / (Rat(1) + q.pow(M));
}

QpNumber volkenborn_partial(const IntegrandSpec& f, long p, int N, const Rat& q) {
    check_budget(p, N);
    Rat s;
    if (f.kind == IntegrandSpec::Kind::FallingLambdaChi) {
        long M = npow(p, N);
        Rat acc(0), w = f.lambda.pow(f.n);  // lambda^(x+n) q^x rolled into w
        for (long x = 0; x < M; ++x) {
            Rat c = f.chi.real_value(x);
            if (!c.is_zero()) acc += falling_factorial(Rat(x), f.n) * c * w;
            w *= f.lambda * q;
        }
        Rat bracket = q.is_one() ? Rat(M) : (Rat(1) - q.pow(M)) / (Rat(1) - q);
        s = acc / bracket;
    } else {
        s = qvolkenborn_sum(p, N, q, [&](long x) { return f.eval(x); });
    }
    return qp_exact(p, s);
}

QpNumber fermionic_partial(const IntegrandSpec& f, long p, int N, const Rat& q) {
    check_budget(p, N);
    if (p == 2) throw std::invalid_argument("fermionic_partial: p must be odd");
    Rat s;
    if (f.kind == IntegrandSpec::Kind::FallingLambdaChi) {
        long M = npow(p, N);
        Rat acc(0), w = f.lambda.pow(f.n);
        for (long x = 0; x < M; ++x) {
            Rat c = f.chi.real_value(x);
            if (!c.is_zero()) acc += falling_factorial(Rat(x), f.n) * c * w;
            w *= -(f.lambda * q);
        }
        s = q.is_one() ? acc : acc * (Rat(1) + q) / (Rat(1) + q.pow(M));
    } else {
        s = fermionic_sum(p, N, q, [&](long x) { return f.eval(x); });
    }
    return qp_exact(p, s);
}

WittReport witt_report(WittKind kind, int n, const Rat& z, long p, int Nmax) {
    WittReport rep{kind, n, z, p, {}, true, Rat(0)};
    rep.target = kind == WittKind::Bosonic ? apostol_bernoulli_poly(z, Rat(1), n)[static_cast<size_t>(n)]
                                           : apostol_euler_poly(z, Rat(1), n)[static_cast<size_t>(n)];
    IntegrandSpec f;
    f.kind = z.is_zero() ? IntegrandSpec::Kind::Monomial : IntegrandSpec::Kind::ShiftedMonomial;
    f.n = n;
    f.z = z;
    long last = -(1L << 20);
    for (int N = 1; N <= Nmax; ++N) {
        QpNumber s = kind == WittKind::Bosonic ? volkenborn_partial(f, p, N)
                                               : fermionic_partial(f, p, N);
        Rat diff = s.value - rep.target;
        ValuationRow row{N, diff.is_zero(), 0};
        if (!row.exact) row.val = padic_valuation(diff, p);
        long cur = row.exact ? (1L << 20) : row.val;
        if (cur < last) rep.monotone = false;
        last = cur;
        rep.rows.push_back(row);
    }
    return rep;
}

Rat mahler_integral(const RatPoly& f) {
    int k = f.is_zero() ? 0 : f.degree();
    Rat acc(0);
    for (int n = 0; n <= k; ++n) {
        // Mahler coefficient a_n = finite difference Delta^n f(0)
        Rat a(0);
        for (int i = 0; i <= n; ++i) {
            Rat t = Rat(binomial_int(n, i)) * f.eval(Rat(i));
            if ((n - i) % 2 == 1) t = -t;
            a += t;
        }
        Rat term = a / Rat(n + 1);
        if (n % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

QpNumber logexpr_eval_padic(const LogExpr& e, long p, const Rat& lambda, const Rat& q,
                            long prec) {
    QpNumber ll = padic_log(qp_approx(p, lambda, prec), prec);
    QpNumber lq = padic_log(qp_approx(p, q, prec), prec);
    auto eval_poly = [&](const BivarPoly& poly) {
        QpNumber acc = qp_approx(p, Rat(0), prec);
        for (const auto& [key, c] : poly.terms()) {
            if (!c.is_rational())
                throw std::invalid_argument("logexpr_eval_padic: non-rational coefficient");
            QpNumber term = qp_exact(p, c.to_rat());
            for (int i = 0; i < key.first; ++i) term = term * ll;
            for (int j = 0; j < key.second; ++j) term = term * lq;
            acc = acc + term;
        }
        return acc;
    };
    return eval_poly(e.num()) / eval_poly(e.den());
}

std::vector<ValuationRow> integral_rep_check(RepKind kind, const DirichletChar& chi,
                                             const Rat& lambda, const Rat& q, int n, long p,
                                             int Nmax) {
    if (!chi.is_real()) throw std::domain_error("integral_rep_check: chi must be real");
    if (!lambda.is_one() && padic_valuation(lambda - Rat(1), p) < 1)
        throw std::domain_error("integral_rep_check: lambda must be 1 mod p");
    if (!q.is_one() && padic_valuation(q - Rat(1), p) < 1)
        throw std::domain_error("integral_rep_check: q must be 1 mod p");
    if (chi.modulus % p == 0)
        throw std::domain_error("integral_rep_check: conductor must be coprime to p");

    long prec = Nmax + 10;
    LogExpr sym;
    if (kind == RepKind::Daehee) {
        DaeheeContext ctx{chi, lambda, q, false, n + 2};
        sym = daehee_numbers(ctx, n)[static_cast<size_t>(n)];
    } else {
        ChangheeContext ctx{chi, lambda, q, n + 2};
        sym = changhee_numbers(ctx, n)[static_cast<size_t>(n)];
    }
    QpNumber target = logexpr_eval_padic(sym, p, lambda, q, prec);

    // The character lives on Z/d, which is not p-adically continuous for
    // d > 1; the integral is realized on X = lim Z/(d p^N), so the level-N
    // sums run over x < d p^N with the matching [d p^N] normalization.
    long d = chi.modulus;
    std::vector<ValuationRow> rows;
    for (int N = 1; N <= Nmax; ++N) {
        check_budget(p, N);
        long M = d * npow(p, N);
        Rat acc(0), w = lambda.pow(n);  // lambda^(x+n) (+-q)^x rolled into w
        Rat base = kind == RepKind::Daehee ? lambda * q : -(lambda * q);
        for (long x = 0; x < M; ++x) {
            Rat c = chi.real_value(x);
            if (!c.is_zero()) acc += falling_factorial(Rat(x), n) * c * w;
            w *= base;
        }
        Rat s;
        if (kind == RepKind::Daehee)
            s = acc * (Rat(1) - q) / (Rat(1) - q.pow(M));
        else
            s = acc * (Rat(1) + q) / (Rat(1) - (-q).pow(M));
        auto v = qp_diff_valuation(qp_exact(p, s), target);
        ValuationRow row{N, !v.has_value(), v.value_or(0)};
        rows.push_back(row);
    }
    return rows;
}

IdentityReport translation_check(const RatPoly& f, int m, long p, int N) {
    if (m < 0) throw std::invalid_argument("translation_check: m must be nonnegative");
    // f(x+m) expanded exactly
    RatPoly shifted;
    {
        std::vector<Rat> c(static_cast<size_t>(std::max(f.degree(), 0)) + 1, Rat(0));
        for (int i = 0; i <= f.degree(); ++i) {
            // x^i -> sum_k binom(i,k) m^(i-k) x^k
            for (int k = 0; k <= i; ++k)
                c[static_cast<size_t>(k)] +=
                    f.coeff(i) * Rat(binomial_int(i, k)) * Rat(m).pow(i - k);
        }
        shifted = RatPoly(c);
    }
    auto as_spec = [&](const RatPoly& g) {
        return [g](long x) { return g.eval(Rat(x)); };
    };
    Rat lhs = qvolkenborn_sum(p, N, Rat(1), as_spec(shifted));
    Rat rhs = qvolkenborn_sum(p, N, Rat(1), as_spec(f));
    RatPoly fp = f.derivative();
    for (long x = 0; x < m; ++x) rhs += fp.eval(Rat(x));

    IdentityReport rep;
    rep.theorem = "volkenborn-translation";
    std::ostringstream os;
    os << "f=" << f.str() << ";m=" << m << ";p=" << p << ";N=" << N;
    rep.params = os.str();
    Rat diff = lhs - rhs;
    if (diff.is_zero()) {
        rep.status = "PASS";
        rep.note = "sides agree exactly";
    } else {
        long v = padic_valuation(diff, p);
        rep.status = v >= N - f.degree() ? "PASS" : "FAIL";
        rep.left = lhs.str();
        rep.right = rhs.str();
        rep.note = "v_p(difference) = " + std::to_string(v);
    }
    return rep;
}

}  // namespace apostol
