#pragma once

#include "apostol/dirichlet.hpp"
#include "apostol/logexpr.hpp"
#include "apostol/poly.hpp"
#include "apostol/verify.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace apostol {

/// v_p of a nonzero rational (negative for denominators divisible by p).
long padic_valuation(const Rat& r, long p);

/// p-adic number held as an exact rational representative known to absolute
/// precision prec: the true value is representative + O(p^prec). Partial sums
/// and other exact quantities carry a large sentinel precision.
struct QpNumber {
    long p = 2;
    Rat value{0};
    long prec = 0;

    /// True when the representative is 0 or v_p(representative) >= prec.
    bool is_zero_at_precision() const;
    long valuation() const;  // v_p of the representative; throws on zero
    /// Unit part of the representative reduced mod p^digits.
    Int unit(long digits) const;
    std::string str() const;
};

/// Sentinel precision for exact values.
inline constexpr long kExactPrec = 1L << 30;

QpNumber qp_exact(long p, const Rat& v);
QpNumber qp_approx(long p, const Rat& v, long prec);

QpNumber operator+(const QpNumber& a, const QpNumber& b);
QpNumber operator-(const QpNumber& a, const QpNumber& b);
QpNumber operator*(const QpNumber& a, const QpNumber& b);
QpNumber qp_inv(const QpNumber& a);
QpNumber operator/(const QpNumber& a, const QpNumber& b);

/// v_p(a - b); nullopt when the difference vanishes to the shared precision.
std::optional<long> qp_diff_valuation(const QpNumber& a, const QpNumber& b);

/// Iwasawa logarithm by the truncated series sum (-1)^(k+1) (u-1)^k / k.
/// Requires u = 1 mod p, p odd; the result carries min(u.prec, prec_cap).
QpNumber padic_log(const QpNumber& u, long prec_cap = 64);

struct IntegrandSpec {
    enum class Kind { Monomial, ShiftedMonomial, Binomial, FallingLambdaChi };
    Kind kind = Kind::Monomial;
    int n = 0;                               // degree / falling-factorial index
    Rat z{0};                                // shift for ShiftedMonomial
    long j = 0;                              // Binomial index
    Rat lambda{1};                           // FallingLambdaChi weight base
    DirichletChar chi = trivial_character();

    /// pre (FallingLambdaChi): real character; lambda = 1 mod p is checked
    /// by the integral routines, not here.
    Rat eval(long x) const;
};

/// (1/[p^N]_q) sum_{x<p^N} f(x) q^x; the bosonic Volkenborn partial sum for
/// q = 1. Budget p^N <= 10^6 summands.
QpNumber volkenborn_partial(const IntegrandSpec& f, long p, int N, const Rat& q = Rat(1));

/// sum_{x<p^N} f(x) (-q)^x, normalized by (1+q)/(1+q^(p^N)) for q != 1.
/// p must be odd; q = 1 mod p when q != 1.
QpNumber fermionic_partial(const IntegrandSpec& f, long p, int N, const Rat& q = Rat(1));

/// Generic exact partial sums for ad-hoc integrands.
Rat qvolkenborn_sum(long p, int N, const Rat& q, const std::function<Rat(long)>& f);
Rat fermionic_sum(long p, int N, const Rat& q, const std::function<Rat(long)>& f);

struct ValuationRow {
    int N = 0;
    bool exact = false;  // difference is exactly zero
    long val = 0;        // v_p(partial - target) when not exact
};

enum class WittKind { Bosonic, Fermionic };

struct WittReport {
    WittKind kind;
    int n;
    Rat z;
    long p;
    std::vector<ValuationRow> rows;
    bool monotone = true;  // valuations nondecreasing in N
    Rat target{0};
};

/// Valuation table of v_p(S_N - target) for N = 1..Nmax, target B_n(z)
/// (bosonic) or E_n(z) (fermionic).
WittReport witt_report(WittKind kind, int n, const Rat& z, long p, int Nmax);

/// Exact Volkenborn integral of a polynomial through its Mahler expansion:
/// sum (-1)^n a_n / (n+1) with a_n the finite differences at 0.
Rat mahler_integral(const RatPoly& f);

/// Evaluates a LogExpr p-adically with Ll -> log_p(lambda), Lq -> log_p(q).
/// Requires rational coefficients and lambda = q = 1 mod p.
QpNumber logexpr_eval_padic(const LogExpr& e, long p, const Rat& lambda, const Rat& q, long prec);

enum class RepKind { Daehee, Changhee };

/// Compares the partial-sum integral against the symbolic number for
/// N = 1..Nmax. pre: lambda = q = 1 mod p, chi real, conductor coprime to p.
std::vector<ValuationRow> integral_rep_check(RepKind kind, const DirichletChar& chi,
                                             const Rat& lambda, const Rat& q, int n, long p,
                                             int Nmax);

/// Volkenborn translation formula: integral of f(x+m) vs integral of f plus
/// the derivative sum over x < m. Reports the p-adic distance of the sides.
IdentityReport translation_check(const RatPoly& f, int m, long p, int N);

}  // namespace apostol
