#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apostol/cyclotomic.hpp"
#include "apostol/logexpr.hpp"
#include "apostol/poly.hpp"
#include "apostol/rat.hpp"
#include "apostol/series.hpp"

#include <random>

using namespace apostol;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational parsing and basics") {
    CHECK(Rat::parse("-7/21") == Rat(-1, 3));
    CHECK(Rat::parse("5") == Rat(5));
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(-2).pow(3) == Rat(-8));
    CHECK(Rat(3, 4).inv() == Rat(4, 3));
    CHECK_THROWS_AS(Rat(0).inv(), std::domain_error);
    CHECK(Rat(6, 4).str() == "3/2");
}

TEST_CASE("rational field laws on random triples") {
    for (int i = 0; i < 200; ++i) {
        Rat a = random_rat(), b = random_rat(), c = random_rat();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Rat(1));
    }
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(6) == 720);
    CHECK(binomial_int(10, 4) == 210);
    CHECK(binomial_int(4, 7) == 0);
    CHECK(binomial_rat(Rat(1, 2), 2) == Rat(-1, 8));
    CHECK(falling_factorial(Rat(5), 3) == Rat(60));
    CHECK(falling_factorial(Rat(1, 2), 2) == Rat(-1, 4));
    CHECK(falling_factorial(Rat(7), 0) == Rat(1));
}

TEST_CASE("polynomial arithmetic and calculus") {
    RatPoly f({Rat(1), Rat(0), Rat(3)});  // 1 + 3x^2
    CHECK(f.eval(Rat(2)) == Rat(13));
    CHECK(f.derivative() == RatPoly({Rat(0), Rat(6)}));
    CHECK(f.integral().derivative() == f);

    RatPoly g({Rat(-1), Rat(1)});
    RatPoly q, r;
    RatPoly::divmod(f, g, q, r);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == RatPoly({Rat(-1), Rat(1)}));
    CHECK(cyclotomic_poly(12) == RatPoly({Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}));
    // product over divisors of 6 gives x^6 - 1
    RatPoly prod = cyclotomic_poly(1) * cyclotomic_poly(2) * cyclotomic_poly(3) * cyclotomic_poly(6);
    std::vector<Rat> x6(7, Rat(0));
    x6[0] = Rat(-1);
    x6[6] = Rat(1);
    CHECK(prod == RatPoly(x6));
}

TEST_CASE("cyclotomic field arithmetic") {
    CycQ z = CycQ::zeta(5);
    CycQ s(Rat(1));
    for (int k = 1; k < 5; ++k) s = s + CycQ::zeta_pow(5, k);
    CHECK(s.is_zero());
    CHECK(CycQ::zeta_pow(5, 5) == CycQ(Rat(1)));
    CHECK((z * z.inv()) == CycQ(Rat(1)));

    // i^2 = -1 in Q(zeta_4)
    CycQ i = CycQ::zeta(4);
    CHECK(i * i == CycQ(Rat(-1)));
    CHECK((i + CycQ(Rat(2))).is_rational() == false);
    CHECK(CycQ(Rat(7, 3)).to_rat() == Rat(7, 3));
}

TEST_CASE("log expressions compare by cross multiplication") {
    LogExpr Ll = LogExpr::sym_llambda(), Lq = LogExpr::sym_lq();
    CHECK((Ll * Ll - Lq * Lq) / (Ll - Lq) == Ll + Lq);
    CHECK((Ll / Lq) * (Lq / Ll) == LogExpr(1));
    CHECK(Ll + Lq != Ll);
    CHECK((Ll - Ll).is_zero());
    LogExpr e = (LogExpr(Rat(2)) * Ll + LogExpr(1)) / (Lq + LogExpr(3));
    CHECK(e * (Lq + LogExpr(3)) == LogExpr(Rat(2)) * Ll + LogExpr(1));
    CHECK(e.inv() * e == LogExpr(1));
    CHECK(LogExpr(Rat(5, 2)).is_rational());
    CHECK(LogExpr(Rat(5, 2)).to_rat() == Rat(5, 2));
    CHECK_FALSE(Ll.is_rational());
}

TEST_CASE("log expression ring laws on random samples") {
    LogExpr pool[5] = {LogExpr::sym_llambda(), LogExpr::sym_lq(), LogExpr(Rat(3, 2)),
                       LogExpr::sym_llambda() + LogExpr(1),
                       LogExpr::sym_lq() * LogExpr::sym_llambda() - LogExpr(Rat(1, 3))};
    std::uniform_int_distribution<int> pick(0, 4);
    for (int i = 0; i < 60; ++i) {
        const LogExpr &a = pool[pick(rng)], &b = pool[pick(rng)], &c = pool[pick(rng)];
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
        if (!a.is_zero()) CHECK(b / a * a == b);
    }
}

TEST_CASE("series ring and transcendental operations") {
    using S = TruncSeries<Rat>;
    int T = 12;
    S e1 = S::exp_t(Rat(1), T), e2 = S::exp_t(Rat(2), T);
    CHECK(e1 * e1 == e2);

    S em1 = e1 - S::one(T);
    CHECK(log1p(em1) == S::t(T));

    // (1+g)^3 by binomial series equals the direct cube
    S g = S::t(T) + S::t(T).shift_up(1).scaled(Rat(1, 2));
    S cube = (S::one(T) + g) * (S::one(T) + g) * (S::one(T) + g);
    CHECK(binomial_series(Rat(3), g) == cube);

    // division cancelling a shared factor t^2 drops the truncation by 2
    S num = e1.shift_up(2), den = S::t(T).shift_up(1);
    S quot = div(num, den);
    CHECK(quot.trunc() == T - 2);
    CHECK(quot == e1.truncated(T - 2));
    CHECK_THROWS_AS(div(S::one(T), S::t(T)), std::domain_error);
    CHECK_THROWS_AS(div(S::one(T), S::zero(T)), std::domain_error);

    CHECK(e1.egf(5) == Rat(1));
    CHECK(S::exp_t(Rat(3), T).egf(4) == Rat(81));

    // compose: exp(log(1+t)) = 1 + t
    S l = log1p(S::t(T));
    CHECK(e1.compose(l) == S::one(T) + S::t(T));
    CHECK_THROWS_AS(e1.compose(e1), std::domain_error);
}

TEST_CASE("series over log expressions") {
    using S = TruncSeries<LogExpr>;
    int T = 6;
    LogExpr Ll = LogExpr::sym_llambda();
    S a = S::exp_t(Ll, T);
    CHECK(a.coeff(2) == Ll * Ll * LogExpr(Rat(1, 2)));
    CHECK(div(a, a) == S::one(T));
}
