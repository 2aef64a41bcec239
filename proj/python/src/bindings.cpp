#include "apostol/apostol.hpp"
#include "apostol/padic.hpp"
#include "apostol/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace apostol;

namespace {

std::vector<std::string> to_strings(const std::vector<LogExpr>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.str());
    return out;
}

DaeheeContext make_daehee(const std::string& chi, const std::string& lambda,
                          const std::string& q, int max_n) {
    DaeheeContext ctx;
    ctx.chi = parse_character(chi);
    ctx.lambda = Rat::parse(lambda);
    if (q == "limit1") {
        ctx.q = Rat(1);
        ctx.q_limit_1 = true;
    } else {
        ctx.q = Rat::parse(q);
    }
    if (ctx.T < max_n + 2) ctx.T = max_n + 2;
    return ctx;
}

ChangheeContext make_changhee(const std::string& chi, const std::string& lambda,
                              const std::string& q, int max_n) {
    ChangheeContext ctx;
    ctx.chi = parse_character(chi);
    ctx.lambda = Rat::parse(lambda);
    ctx.q = Rat::parse(q);
    if (ctx.T < max_n + 2) ctx.T = max_n + 2;
    return ctx;
}

py::dict report_dict(const IdentityReport& r) {
    py::dict d;
    d["theorem"] = r.theorem;
    d["params"] = r.params;
    d["status"] = r.status;
    d["left"] = r.left;
    d["right"] = r.right;
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact generalized Daehee/Changhee numbers, identity checks, p-adic sums";

    m.def(
        "daehee_numbers",
        [](const std::string& chi, const std::string& lambda, const std::string& q, int max_n) {
            return to_strings(daehee_numbers(make_daehee(chi, lambda, q, max_n), max_n));
        },
        py::arg("chi") = "trivial", py::arg("lambda_") = "1", py::arg("q") = "limit1",
        py::arg("max_n") = 10);

    m.def(
        "daehee_polynomials",
        [](const std::string& chi, const std::string& lambda, const std::string& q,
           const std::string& z, int max_n) {
            return to_strings(
                daehee_polynomials(make_daehee(chi, lambda, q, max_n), Rat::parse(z), max_n));
        },
        py::arg("chi") = "trivial", py::arg("lambda_") = "1", py::arg("q") = "limit1",
        py::arg("z") = "0", py::arg("max_n") = 10);

    m.def(
        "changhee_numbers",
        [](const std::string& chi, const std::string& lambda, const std::string& q, int max_n) {
            return to_strings(changhee_numbers(make_changhee(chi, lambda, q, max_n), max_n));
        },
        py::arg("chi") = "trivial", py::arg("lambda_") = "1", py::arg("q") = "1",
        py::arg("max_n") = 10);

    m.def(
        "changhee_polynomials",
        [](const std::string& chi, const std::string& lambda, const std::string& q,
           const std::string& z, int max_n) {
            return to_strings(
                changhee_polynomials(make_changhee(chi, lambda, q, max_n), Rat::parse(z), max_n));
        },
        py::arg("chi") = "trivial", py::arg("lambda_") = "1", py::arg("q") = "1",
        py::arg("z") = "0", py::arg("max_n") = 10);

    m.def(
        "family_values",
        [](const std::string& family, int max_n, std::optional<std::string> x,
           std::optional<std::string> lambda, std::optional<std::string> u,
           std::optional<long> v, std::optional<std::string> chi) {
            FamilySpec spec;
            spec.id = parse_family_id(family);
            if (x) spec.x = Rat::parse(*x);
            if (lambda) spec.lambda = Rat::parse(*lambda);
            if (u) spec.u = Rat::parse(*u);
            if (v) spec.v = *v;
            if (chi) spec.chi = parse_character(*chi);
            return to_strings(family_values(spec, max_n));
        },
        py::arg("family"), py::arg("max_n") = 10, py::arg("x") = std::nullopt,
        py::arg("lambda_") = std::nullopt, py::arg("u") = std::nullopt,
        py::arg("v") = std::nullopt, py::arg("chi") = std::nullopt);

    m.def("theorem_registry", [] { return theorem_registry(); });

    m.def(
        "verify_grid",
        [](const std::string& theorem, int max_m) {
            py::list out;
            for (const auto& r : verify_default_grid(theorem, max_m)) out.append(report_dict(r));
            return out;
        },
        py::arg("theorem"), py::arg("max_m") = 10);

    m.def(
        "verify_point",
        [](const std::string& theorem, const std::string& chi, const std::string& lambda,
           const std::string& q, int max_m) {
            VerifyParams p;
            p.chi = parse_character(chi);
            p.lambda = Rat::parse(lambda);
            if (q == "limit1") {
                p.q = Rat(1);
                p.q_limit_1 = true;
            } else {
                p.q = Rat::parse(q);
            }
            p.max_m = max_m;
            return report_dict(verify_identity(theorem, p));
        },
        py::arg("theorem"), py::arg("chi") = "trivial", py::arg("lambda_") = "2",
        py::arg("q") = "2", py::arg("max_m") = 10);

    m.def(
        "mahler_integral",
        [](const std::vector<std::string>& coeffs) {
            std::vector<Rat> c;
            c.reserve(coeffs.size());
            for (const auto& s : coeffs) c.push_back(Rat::parse(s));
            return mahler_integral(RatPoly(c)).str();
        },
        py::arg("coeffs"));

    m.def(
        "witt_report",
        [](const std::string& kind, int n, const std::string& z, long p, int Nmax) {
            WittReport r = witt_report(kind == "fermionic" ? WittKind::Fermionic
                                                           : WittKind::Bosonic,
                                       n, Rat::parse(z), p, Nmax);
            py::dict d;
            d["kind"] = kind;
            d["n"] = r.n;
            d["p"] = r.p;
            d["target"] = r.target.str();
            d["monotone"] = r.monotone;
            py::list rows;
            for (const auto& row : r.rows) {
                py::dict rd;
                rd["N"] = row.N;
                rd["exact"] = row.exact;
                if (!row.exact) rd["val"] = row.val;
                rows.append(rd);
            }
            d["rows"] = rows;
            return d;
        },
        py::arg("kind"), py::arg("n"), py::arg("z") = "0", py::arg("p") = 3,
        py::arg("Nmax") = 6);

    m.def(
        "integral_rep_check",
        [](const std::string& kind, const std::string& chi, const std::string& lambda,
           const std::string& q, int n, long p, int Nmax) {
            auto rows = integral_rep_check(kind == "changhee" ? RepKind::Changhee
                                                              : RepKind::Daehee,
                                           parse_character(chi), Rat::parse(lambda),
                                           Rat::parse(q), n, p, Nmax);
            py::list out;
            for (const auto& row : rows) {
                py::dict rd;
                rd["N"] = row.N;
                rd["exact"] = row.exact;
                if (!row.exact) rd["val"] = row.val;
                out.append(rd);
            }
            return out;
        },
        py::arg("kind"), py::arg("chi"), py::arg("lambda_"), py::arg("q"), py::arg("n"),
        py::arg("p") = 5, py::arg("Nmax") = 5);
}
