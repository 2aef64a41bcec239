#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apostol/apostol.hpp"
#include "apostol/verify.hpp"

using namespace apostol;

namespace {

DaeheeContext classical_daehee() {
    DaeheeContext ctx;
    ctx.chi = trivial_character();
    ctx.lambda = Rat(1);
    ctx.q = Rat(1);
    ctx.q_limit_1 = true;
    return ctx;
}

}  // namespace

TEST_CASE("daehee numbers reduce to (-1)^n n!/(n+1)") {
    auto d = daehee_numbers(classical_daehee(), 12);
    for (int n = 0; n <= 12; ++n) {
        Rat expect = Rat(n % 2 ? -1 : 1) * Rat(factorial(n)) / Rat(n + 1);
        CHECK(d[n] == LogExpr(expect));
    }
}

TEST_CASE("changhee numbers reduce to (-1)^n n!/2^n") {
    ChangheeContext ctx;
    ctx.chi = trivial_character();
    ctx.lambda = Rat(1);
    ctx.q = Rat(1);
    auto c = changhee_numbers(ctx, 12);
    for (int n = 0; n <= 12; ++n) {
        Rat expect = Rat(n % 2 ? -1 : 1) * Rat(factorial(n)) / Rat(2).pow(n);
        CHECK(c[n] == LogExpr(expect));
    }
}

TEST_CASE("polynomials at z = 0 are the numbers") {
    DaeheeContext ctx;
    ctx.chi = kronecker_character(-3);
    ctx.lambda = Rat(2);
    ctx.q = Rat(3, 2);
    auto nums = daehee_numbers(ctx, 8);
    auto pols = daehee_polynomials(ctx, Rat(0), 8);
    for (int n = 0; n <= 8; ++n) CHECK(pols[n] == nums[n]);

    ChangheeContext cc;
    cc.chi = ctx.chi;
    cc.lambda = ctx.lambda;
    cc.q = ctx.q;
    auto cn = changhee_numbers(cc, 8);
    auto cp = changhee_polynomials(cc, Rat(0), 8);
    for (int n = 0; n <= 8; ++n) CHECK(cp[n] == cn[n]);
}

TEST_CASE("corrected closed forms match the series extraction") {
    DaeheeContext ctx;
    ctx.chi = kronecker_character(-3);
    ctx.lambda = Rat(2);
    ctx.q = Rat(3, 2);
    auto nums = daehee_numbers(ctx, 6);
    auto closed = daehee_closed_form(ctx, 6, Variant::Corrected);
    for (int n = 1; n <= 6; ++n) CHECK(closed[n] == nums[n]);

    // the removable pole at lambda q = 1 needs log lambda = -log q
    DaeheeContext pole;
    pole.chi = parse_character("mod:3:1");
    pole.lambda = Rat(1, 2);
    pole.q = Rat(2);
    auto pn = daehee_numbers(pole, 5);
    auto pc = daehee_closed_form(pole, 5, Variant::Corrected);
    for (int n = 1; n <= 5; ++n) CHECK(pc[n] == pn[n]);

    ChangheeContext cc;
    cc.chi = kronecker_character(-4);
    cc.lambda = Rat(2);
    cc.q = Rat(3, 2);
    auto cn = changhee_numbers(cc, 6);
    auto ccf = changhee_closed_form(cc, 6, Variant::Corrected);
    for (int n = 0; n <= 6; ++n) CHECK(ccf[n] == cn[n]);
}

TEST_CASE("context validation") {
    DaeheeContext bad;
    bad.chi = kronecker_character(-4);
    bad.lambda = Rat(-1, 2);
    bad.q = Rat(2);
    // (lambda q)^d = 1 with lambda q != 1 puts a genuine pole at t = 0
    CHECK_THROWS_AS(daehee_numbers(bad, 3), std::domain_error);

    ChangheeContext cbad;
    cbad.chi = trivial_character();
    cbad.lambda = Rat(-1, 2);
    cbad.q = Rat(2);
    // (lambda q)^d = -1 puts the fermionic pole at t = 0
    CHECK_THROWS_AS(changhee_numbers(cbad, 3), std::domain_error);
}

TEST_CASE("theorem registry and dispatch") {
    const auto& reg = theorem_registry();
    CHECK(reg.size() == 15);
    CHECK_THROWS_AS(verify_identity("no-such-theorem", VerifyParams{}), std::invalid_argument);

    VerifyParams p;
    p.chi = kronecker_character(-4);
    p.lambda = Rat(2);
    p.q = Rat(3, 2);
    p.max_m = 6;
    for (const char* id : {"da-binom", "ch-binom", "da-4", "da-5"}) {
        REQUIRE(theorem_applicable(id, p));
        CHECK(verify_identity(id, p).status == "PASS");
    }
}

TEST_CASE("grid runs report no silent failures") {
    for (const auto& r : verify_default_grid("da-5", 6)) CHECK(r.status == "PASS");
    for (const auto& r : verify_default_grid("f3", 4)) CHECK(r.status == "PASS-corrected");
    auto all = verify_default_grid("fen-2", 5);
    CHECK(!all.empty());
    for (const auto& r : all) {
        CHECK(r.status != "FAIL");
        CHECK(!r.params.empty());
    }
}

TEST_CASE("report serialization") {
    auto reports = verify_default_grid("da-4", 4);
    std::string j = reports_to_json(reports);
    CHECK(j.find("\"theorem\"") != std::string::npos);
    CHECK(j.find("da-4") != std::string::npos);
    CHECK(j.find("\"status\"") != std::string::npos);
}

TEST_CASE("inapplicable parameters are rejected") {
    VerifyParams p;
    p.chi = kronecker_character(-4);  // even conductor
    p.lambda = Rat(2);
    p.q = Rat(2);
    CHECK_FALSE(theorem_applicable("final-bch", p));
    CHECK_THROWS_AS(verify_identity("final-bch", p), std::domain_error);
}
