#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apostol/families.hpp"
#include "apostol/padic.hpp"

using namespace apostol;

namespace {

RatPoly falling_poly(int n) {
    RatPoly f = RatPoly::constant(Rat(1));
    for (int i = 0; i < n; ++i) f = f * RatPoly({Rat(-i), Rat(1)});
    return f;
}

RatPoly binom_poly(int j) { return falling_poly(j).scaled(Rat(factorial(j)).inv()); }

}  // namespace

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(Rat(50), 5) == 2);
    CHECK(padic_valuation(Rat(3, 25), 5) == -2);
    CHECK(padic_valuation(Rat(7), 5) == 0);
    CHECK_THROWS_AS(padic_valuation(Rat(0), 5), std::domain_error);
}

TEST_CASE("qp arithmetic tracks precision") {
    QpNumber a = qp_approx(5, Rat(26), 4);   // 26 + O(5^4)
    QpNumber b = qp_approx(5, Rat(5), 3);    // 5 + O(5^3)
    CHECK((a + b).prec == 3);
    CHECK((a * b).prec == 3);  // min(A_a + v_b, A_b + v_a)
    QpNumber inv = qp_inv(b);
    CHECK(inv.prec == 3 - 2);  // A - 2v
    CHECK((b * inv).value == Rat(1));

    QpNumber exact = qp_exact(5, Rat(3, 2));
    CHECK(exact.prec == kExactPrec);
    CHECK(exact.valuation() == 0);
    CHECK(qp_exact(5, Rat(0)).is_zero_at_precision());
    CHECK(qp_approx(5, Rat(125), 2).is_zero_at_precision());
}

TEST_CASE("diff valuation") {
    auto v = qp_diff_valuation(qp_exact(5, Rat(7)), qp_exact(5, Rat(132)));
    REQUIRE(v.has_value());
    CHECK(*v == 3);
    CHECK_FALSE(qp_diff_valuation(qp_exact(5, Rat(7)), qp_exact(5, Rat(7))).has_value());
}

TEST_CASE("iwasawa logarithm") {
    CHECK(padic_log(qp_exact(5, Rat(1)), 20).is_zero_at_precision());
    QpNumber l6 = padic_log(qp_exact(5, Rat(6)), 20);
    CHECK(l6.valuation() == 1);
    QpNumber l36 = padic_log(qp_exact(5, Rat(36)), 20);
    QpNumber two_l6 = qp_exact(5, Rat(2)) * l6;
    auto d = qp_diff_valuation(l36, two_l6);
    CHECK((!d.has_value() || *d >= 19));
    CHECK_THROWS_AS(padic_log(qp_exact(5, Rat(2)), 10), std::domain_error);
}

TEST_CASE("mahler integral of polynomials") {
    auto B = apostol_bernoulli_poly(Rat(0), Rat(1), 10);
    for (int k = 0; k <= 10; ++k) {
        std::vector<Rat> mono(static_cast<size_t>(k) + 1, Rat(0));
        mono.back() = Rat(1);
        CHECK(mahler_integral(RatPoly(mono)) == B[k]);
    }
    for (int j = 0; j <= 10; ++j)
        CHECK(mahler_integral(binom_poly(j)) == Rat(j % 2 ? -1 : 1) / Rat(j + 1));
}

TEST_CASE("volkenborn partial sums approach their limits") {
    IntegrandSpec one;
    one.kind = IntegrandSpec::Kind::Monomial;
    one.n = 0;
    for (int N = 1; N <= 4; ++N) CHECK(volkenborn_partial(one, 5, N).value == Rat(1));

    IntegrandSpec x1;
    x1.kind = IntegrandSpec::Kind::Monomial;
    x1.n = 1;
    QpNumber s = volkenborn_partial(x1, 5, 6);
    auto v = qp_diff_valuation(s, qp_exact(5, Rat(-1, 2)));
    REQUIRE(v.has_value());
    CHECK(*v >= 5);

    IntegrandSpec b2;
    b2.kind = IntegrandSpec::Kind::Binomial;
    b2.j = 2;
    auto vb = qp_diff_valuation(volkenborn_partial(b2, 5, 6), qp_exact(5, Rat(1, 3)));
    REQUIRE(vb.has_value());
    CHECK(*vb >= 5);

    IntegrandSpec big;
    big.kind = IntegrandSpec::Kind::Monomial;
    big.n = 2;
    CHECK_THROWS_AS(volkenborn_partial(big, 5, 12), std::domain_error);
}

TEST_CASE("fermionic partial sums") {
    IntegrandSpec one;
    one.kind = IntegrandSpec::Kind::Monomial;
    one.n = 0;
    CHECK(fermionic_partial(one, 5, 3).value == Rat(1));

    IntegrandSpec x1;
    x1.kind = IntegrandSpec::Kind::Monomial;
    x1.n = 1;
    auto v = qp_diff_valuation(fermionic_partial(x1, 5, 6), qp_exact(5, Rat(-1, 2)));
    CHECK((!v.has_value() || *v >= 5));

    IntegrandSpec b3;
    b3.kind = IntegrandSpec::Kind::Binomial;
    b3.j = 3;
    auto vb = qp_diff_valuation(fermionic_partial(b3, 5, 6), qp_exact(5, Rat(-1, 8)));
    CHECK((!vb.has_value() || *vb >= 5));
}

TEST_CASE("fermionic single-term expansion against euler polynomials") {
    // integral of binom(x, j) d mu_{-1} = (-1)^j / 2^j, checked through the
    // monomial expansion and the exact Euler-number integrals
    auto E = apostol_euler_poly(Rat(0), Rat(1), 10);
    for (int j = 0; j <= 10; ++j) {
        RatPoly f = binom_poly(j);
        Rat s(0);
        for (int i = 0; i <= f.degree(); ++i) s += f.coeff(i) * E[i];
        CHECK(s == Rat(j % 2 ? -1 : 1) / Rat(2).pow(j));
    }
}

TEST_CASE("witt reports") {
    WittReport b = witt_report(WittKind::Bosonic, 2, Rat(0), 3, 8);
    CHECK(b.monotone);
    CHECK(b.target == Rat(1, 6));
    CHECK(b.rows.size() == 8);

    WittReport z = witt_report(WittKind::Bosonic, 1, Rat(1), 3, 5);
    CHECK(z.target == Rat(1, 2));
    CHECK(z.monotone);

    WittReport f = witt_report(WittKind::Fermionic, 0, Rat(0), 5, 4);
    for (const auto& row : f.rows) CHECK(row.exact);

    WittReport f3 = witt_report(WittKind::Fermionic, 3, Rat(0), 5, 5);
    CHECK(f3.target == Rat(1, 4));
    CHECK(f3.monotone);
}

TEST_CASE("translation identity") {
    RatPoly f({Rat(0), Rat(0), Rat(1)});  // x^2
    IdentityReport r = translation_check(f, 1, 5, 6);
    CHECK(r.status == "PASS");
    CHECK(translation_check(f, 0, 5, 4).status == "PASS");

    // f = x, m = 3: the right side is exactly B_1 + 3 in the limit
    RatPoly lin({Rat(0), Rat(1)});
    CHECK(translation_check(lin, 3, 5, 6).status == "PASS");
}

TEST_CASE("fermionic functional equation at d = 1") {
    // partial sums of f(x+1) + f(x) against 2 f(0): the telescoped remainder
    // is f(p^N) - f(0), so the valuation is at least N
    RatPoly f({Rat(1), Rat(3), Rat(0), Rat(2), Rat(0), Rat(0), Rat(1)});
    long p = 3;
    int N = 8;
    auto ev = [&](long x) { return f.eval(Rat(x)); };
    Rat lhs = fermionic_sum(p, N, Rat(1), [&](long x) { return ev(x + 1); }) +
              fermionic_sum(p, N, Rat(1), ev);
    Rat rhs = Rat(2) * f.eval(Rat(0));
    CHECK(padic_valuation(lhs - rhs, p) >= N);
}

TEST_CASE("q functional equation for exponential integrands") {
    // q^n S(f(. + n)) - S(f) vs (q-1)/log q * sum_{j<n} q^j (f'(j) + log q f(j))
    // for f(x) = u^x with u = lambda(1 + lambda t), t in p Z_p
    long p = 5;
    Rat lambda(6), q(6), t(5);
    Rat u = lambda * (Rat(1) + lambda * t);
    int n = 3;
    QpNumber logu = padic_log(qp_exact(p, u), 40);
    QpNumber logq = padic_log(qp_exact(p, q), 40);
    QpNumber pref = qp_exact(p, q - Rat(1)) / logq;
    QpNumber rhs = qp_exact(p, Rat(0));
    for (int j = 0; j < n; ++j) {
        QpNumber w = qp_exact(p, q.pow(j) * u.pow(j));
        rhs = rhs + pref * w * (logu + logq);
    }
    long prev = -100;
    for (int N = 2; N <= 5; ++N) {
        auto S = [&](long shift) {
            return qvolkenborn_sum(p, N, q, [&](long x) { return u.pow(x + shift); });
        };
        Rat lhs_rat = q.pow(n) * S(n) - S(0);
        QpNumber lhs = qp_exact(p, lhs_rat);
        auto v = qp_diff_valuation(lhs, rhs);
        long val = v.has_value() ? *v : rhs.prec;
        CHECK(val >= prev);
        CHECK(val >= N - 2);
        prev = val;
    }
}

TEST_CASE("integral representation preconditions") {
    CHECK_THROWS_AS(
        integral_rep_check(RepKind::Daehee, trivial_character(), Rat(2), Rat(6), 1, 5, 3),
        std::domain_error);  // lambda != 1 mod p
    CHECK_THROWS_AS(
        integral_rep_check(RepKind::Daehee, parse_character("mod:5:1"), Rat(6), Rat(6), 1, 5, 3),
        std::domain_error);  // conductor shares a factor with p (also non-real)
}

TEST_CASE("integral representation converges for the daehee kind") {
    auto rows = integral_rep_check(RepKind::Daehee, trivial_character(), Rat(6), Rat(6), 1, 5, 5);
    REQUIRE(rows.size() >= 4);
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].exact || rows[i - 1].exact) continue;
        CHECK(rows[i].val > rows[i - 1].val);
    }
}
