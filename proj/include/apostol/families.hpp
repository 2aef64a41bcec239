#pragma once

#include "apostol/dirichlet.hpp"
#include "apostol/logexpr.hpp"
#include "apostol/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apostol {

/// Formal log lambda for a fixed rational lambda: zero when lambda = 1,
/// the Ll symbol otherwise (log 1 = 0 must hold in every identity).
LogExpr log_of_lambda(const Rat& lambda);
/// Same for q and the Lq symbol.
LogExpr log_of_q(const Rat& q);

enum class FamilyId {
    Bernoulli,
    ApostolBernoulli,
    LambdaBernoulli,
    Euler,
    ApostolEuler,
    FrobeniusEuler,
    Stirling1,
    Stirling2,
    LambdaStirling2,
    ArrayPoly,
    Bernoulli2nd,
    GenBernoulliChi,
    GenEulerChi,
};

FamilyId parse_family_id(const std::string& s);

struct FamilySpec {
    FamilyId id;
    std::optional<Rat> x;       // polynomial argument
    std::optional<Rat> lambda;  // Apostol parameter
    std::optional<Rat> u;       // Frobenius-Euler parameter, != 1
    std::optional<long> v;      // Stirling / array index
    std::optional<DirichletChar> chi;
};

/// EGF coefficients (index n) of the family's generating function, computed
/// from the series definition. lambda-free families come back as embedded
/// rationals.
std::vector<LogExpr> family_values(const FamilySpec& spec, int max_n);

// Rational-valued helpers used by the closed-form paths. All return EGF
// coefficients for n = 0..max_n.

/// Apostol-Bernoulli polynomials B_n(x; mu): t e^{xt} / (mu e^t - 1).
/// mu = 1 reduces to the classical Bernoulli polynomials.
std::vector<Rat> apostol_bernoulli_poly(const Rat& x, const Rat& mu, int max_n);
/// Apostol-Euler polynomials E_n(x; mu): 2 e^{xt} / (mu e^t + 1); mu != -1.
std::vector<Rat> apostol_euler_poly(const Rat& x, const Rat& mu, int max_n);
/// Frobenius-Euler polynomials H_n(x; u): (1-u) e^{xt} / (e^t - u); u != 1.
std::vector<Rat> frobenius_euler_poly(const Rat& x, const Rat& u, int max_n);
/// Bernoulli polynomials of the second kind b_n(x): t/log(1+t) (1+t)^x.
std::vector<Rat> bernoulli_second_kind(const Rat& x, int max_n);
/// Cauchy numbers b_n(0).
std::vector<Rat> cauchy_numbers(int max_n);
/// Stirling numbers of the first kind S1(n, k), n, k <= N (series path).
std::vector<std::vector<Rat>> stirling1_table(int N);
/// Stirling numbers of the second kind S2(n, k), n, k <= N (series path).
std::vector<std::vector<Rat>> stirling2_table(int N);

/// lambda-Bernoulli numbers (log lambda + t)/(lambda e^t - 1), as LogExpr.
std::vector<LogExpr> lambda_bernoulli_numbers(const Rat& lambda, int max_n);

/// Generalized Apostol-Bernoulli/Euler numbers attached to chi, from the
/// attached generating function; the conductor-decomposition closed form is
/// evaluated alongside and must agree.
enum class ChiKind { Bernoulli, Euler };
std::vector<LogExpr> gen_chi_values(ChiKind kind, const DirichletChar& chi, const Rat& lambda,
                                    int max_n);
/// The conductor decomposition alone: d^{n-1} sum_j lambda^j chi(j) B_n(j/d; lambda^d)
/// (Bernoulli kind) and d^n sum_j lambda^j chi(j) E_n(j/d; lambda^d) (Euler kind).
std::vector<CycQ> gen_chi_decomposition(ChiKind kind, const DirichletChar& chi, const Rat& lambda,
                                        int max_n);

/// Signed generalized Euler sum d^n sum_j (-1)^j mu^j chi(j) E_n(j/d; mu^d);
/// the object the Changhee transforms produce for odd conductor.
std::vector<CycQ> gen_euler_chi_signed(const DirichletChar& chi, const Rat& mu, int max_n);

}  // namespace apostol
