#pragma once

#include "apostol/families.hpp"

#include <string>
#include <vector>

namespace apostol {

enum class Variant { AsWritten, Corrected };

/// Parameters of the Daehee-type generating function F_D(t; q, lambda, chi).
/// q_limit_1 selects the q -> 1 specialization in which the prefactor
/// (q-1)/log q is replaced by 1 and q is set to 1.
struct DaeheeContext {
    DirichletChar chi;
    Rat lambda{1};
    Rat q{1};
    bool q_limit_1 = false;
    int T = default_truncation();

    void validate() const;
    /// (q-1)/Lq in symbolic-q mode, 1 in the q -> 1 mode.
    LogExpr pref() const;
    /// log q: Lq symbolically, 0 in the limit mode.
    LogExpr lq() const;
    /// log lambda. For lambda = 1/q in symbolic mode this is -Lq (the one
    /// multiplicative relation the pole cancellation at lambda q = 1 needs).
    LogExpr llambda() const;
    /// log(lambda q) = Ll + Lq (0 contributions for unit parameters).
    LogExpr log_lambda_q() const { return llambda() + lq(); }
};

/// Parameters of the Changhee-type generating function F_E(t; lambda, q, chi).
struct ChangheeContext {
    DirichletChar chi;
    Rat lambda{1};
    Rat q{1};
    int T = default_truncation();

    void validate() const;
    Rat bracket2() const { return Rat(1) + q; }  // [2] = 1 + q
    LogExpr llambda() const { return log_of_lambda(lambda); }
    LogExpr lq() const { return log_of_q(q); }
};

/// Generalized Apostol-Daehee numbers: EGF coefficients of
///   (q-1)(log lambda + log(1+lambda t) + log q)/log q
///   * sum_j (lambda q)^j (1+lambda t)^j chi(j) / ((lambda q (1+lambda t))^d - 1).
std::vector<LogExpr> daehee_numbers(const DaeheeContext& ctx, int max_n);

/// Same with the extra factor (1 + lambda t)^z.
std::vector<LogExpr> daehee_polynomials(const DaeheeContext& ctx, const Rat& z, int max_n);

/// The finite Stirling/Cauchy/Apostol-Bernoulli sum of the Daehee closed
/// form. AsWritten follows the printed formula; Corrected applies the
/// documented index fixes (see the identity registry notes).
std::vector<LogExpr> daehee_closed_form(const DaeheeContext& ctx, int max_n, Variant variant);

/// Generalized Apostol-Changhee numbers: EGF coefficients of
///   [2] sum_j (-1)^j chi(j) (lambda q)^j (1+lambda t)^j
///     / ((lambda q)^d (1+lambda t)^d + 1).
std::vector<LogExpr> changhee_numbers(const ChangheeContext& ctx, int max_n);

std::vector<LogExpr> changhee_polynomials(const ChangheeContext& ctx, const Rat& z, int max_n);

/// The finite Apostol-Euler/Stirling double sum of the Changhee closed form.
std::vector<LogExpr> changhee_closed_form(const ChangheeContext& ctx, int max_n, Variant variant);

}  // namespace apostol
