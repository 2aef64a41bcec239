#include "apostol/padic.hpp"
#include "apostol/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace apostol;
using nlohmann::json;

namespace {

struct QSpec {
    Rat q{1};
    bool limit1 = false;
};

QSpec parse_q(const std::string& s) {
    if (s == "limit1") return {Rat(1), true};
    return {Rat::parse(s), false};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

struct TableRow {
    int n;
    std::string value;
    std::string ring;
};

std::string ring_of(const LogExpr& v) {
    if (v.is_rational()) return "rational";
    if (v.num().is_constant() && v.den().is_constant()) return "cyclotomic";
    return "logexpr";
}

std::string value_of(const LogExpr& v) {
    return v.is_rational() ? v.to_rat().str() : v.str();
}

std::string render_table(const std::vector<TableRow>& rows, const std::string& family,
                         const std::string& params, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"value", r.value},
                           {"ring", r.ring},
                           {"family", family},
                           {"params", params}});
        return arr.dump(2);
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "n,value,ring,family,params\n";
        for (const auto& r : rows)
            os << r.n << ",\"" << r.value << "\"," << r.ring << "," << family << ",\"" << params
               << "\"\n";
        return os.str();
    }
    for (const auto& r : rows) os << r.n << "\t" << r.value << "\n";
    return os.str();
}

std::string render_valuations(const std::vector<ValuationRow>& rows, const std::string& format,
                              const std::string& label) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json row = {{"N", r.N}, {"check", label}};
            if (r.exact)
                row["valuation"] = "exact";
            else
                row["valuation"] = r.val;
            arr.push_back(row);
        }
        return arr.dump(2);
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "N,valuation\n";
        for (const auto& r : rows)
            os << r.N << "," << (r.exact ? std::string("exact") : std::to_string(r.val)) << "\n";
        return os.str();
    }
    os << label << "\n";
    for (const auto& r : rows)
        os << "N=" << r.N << "  v=" << (r.exact ? std::string("exact") : std::to_string(r.val))
           << "\n";
    return os.str();
}

int run_table(const std::string& family_raw, const std::string& chi_spec,
              const std::optional<std::string>& lambda_s, const std::optional<std::string>& q_s,
              const std::optional<std::string>& x_s, const std::optional<std::string>& u_s,
              const std::optional<long>& v_idx, const std::optional<std::string>& z_s, int max_n,
              const std::string& format, const std::string& out_path) {
    std::string family = family_raw;
    for (auto& c : family)
        if (c == '-') c = '_';

    std::vector<LogExpr> values;
    std::ostringstream params;
    params << "chi=" << chi_spec;
    if (lambda_s) params << ";lambda=" << *lambda_s;
    if (q_s) params << ";q=" << *q_s;
    if (x_s) params << ";x=" << *x_s;
    if (u_s) params << ";u=" << *u_s;
    if (v_idx) params << ";v=" << *v_idx;
    if (z_s) params << ";z=" << *z_s;

    if (family == "apostol_daehee" || family == "apostol_changhee") {
        QSpec q = parse_q(q_s.value_or("limit1"));
        Rat lambda = lambda_s ? Rat::parse(*lambda_s) : Rat(1);
        DirichletChar chi = parse_character(chi_spec);
        if (family == "apostol_daehee") {
            DaeheeContext ctx{chi, lambda, q.q, q.limit1, std::max(default_truncation(), max_n + 2)};
            values = z_s ? daehee_polynomials(ctx, Rat::parse(*z_s), max_n)
                         : daehee_numbers(ctx, max_n);
        } else {
            ChangheeContext ctx{chi, lambda, q.q, std::max(default_truncation(), max_n + 2)};
            values = z_s ? changhee_polynomials(ctx, Rat::parse(*z_s), max_n)
                         : changhee_numbers(ctx, max_n);
        }
    } else {
        FamilySpec spec;
        spec.id = parse_family_id(family);
        if (x_s) spec.x = Rat::parse(*x_s);
        if (lambda_s) spec.lambda = Rat::parse(*lambda_s);
        if (u_s) spec.u = Rat::parse(*u_s);
        if (v_idx) spec.v = *v_idx;
        if (spec.id == FamilyId::GenBernoulliChi || spec.id == FamilyId::GenEulerChi)
            spec.chi = parse_character(chi_spec);
        values = family_values(spec, max_n);
    }

    std::vector<TableRow> rows;
    for (int n = 0; n < static_cast<int>(values.size()); ++n)
        rows.push_back({n, value_of(values[static_cast<size_t>(n)]),
                        ring_of(values[static_cast<size_t>(n)])});
    emit(render_table(rows, family_raw, params.str(), format), out_path);
    return 0;
}

int run_verify(const std::string& theorem, const std::optional<std::string>& chi_spec,
               const std::optional<std::string>& lambda_s, const std::optional<std::string>& q_s,
               int max_m, const std::string& format, const std::string& out_path) {
    std::vector<IdentityReport> reports;
    if (chi_spec || lambda_s || q_s) {
        if (theorem == "all") throw std::invalid_argument("--theorem all takes no parameter overrides");
        VerifyParams p;
        p.max_m = max_m;
        if (chi_spec) p.chi = parse_character(*chi_spec);
        if (lambda_s) p.lambda = Rat::parse(*lambda_s);
        if (q_s) {
            QSpec q = parse_q(*q_s);
            p.q = q.q;
            p.q_limit_1 = q.limit1;
        }
        reports.push_back(verify_identity(theorem, p));
    } else {
        reports = verify_default_grid(theorem, max_m);
    }

    int fails = 0, corrected = 0;
    for (const auto& r : reports) {
        if (r.status == "FAIL") ++fails;
        if (r.status == "PASS-corrected") ++corrected;
    }

    if (format == "csv") {
        std::ostringstream os;
        os << "theorem,params,status,left,right,note\n";
        for (const auto& r : reports)
            os << r.theorem << ",\"" << r.params << "\"," << r.status << ",\"" << r.left << "\",\""
               << r.right << "\",\"" << r.note << "\"\n";
        emit(os.str(), out_path);
    } else if (format == "text") {
        std::ostringstream os;
        for (const auto& r : reports)
            os << r.theorem << " [" << r.params << "] " << r.status
               << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
        os << "total=" << reports.size() << " corrected=" << corrected << " failed=" << fails
           << "\n";
        emit(os.str(), out_path);
    } else {
        emit(reports_to_json(reports), out_path);
    }
    return fails == 0 ? 0 : 1;
}

int run_padic(const std::string& check, long p, int n, long j, int k, const std::string& z_s,
              const std::string& lambda_s, const std::string& q_s, const std::string& chi_spec,
              int Nmax, int m, const std::string& format, const std::string& out_path) {
    if (check == "witt-bosonic" || check == "witt-fermionic") {
        WittKind kind = check == "witt-bosonic" ? WittKind::Bosonic : WittKind::Fermionic;
        auto rep = witt_report(kind, n, Rat::parse(z_s), p, Nmax);
        std::ostringstream label;
        label << check << " p=" << p << " n=" << n << " z=" << z_s << " target="
              << rep.target.str() << " monotone=" << (rep.monotone ? "yes" : "no");
        emit(render_valuations(rep.rows, format, label.str()), out_path);
        return 0;
    }
    if (check == "binom") {
        IntegrandSpec f;
        f.kind = IntegrandSpec::Kind::Binomial;
        f.j = j;
        Rat target = Rat(j % 2 == 0 ? 1 : -1) / Rat(j + 1);
        std::vector<ValuationRow> rows;
        for (int N = 1; N <= Nmax; ++N) {
            Rat diff = volkenborn_partial(f, p, N).value - target;
            rows.push_back({N, diff.is_zero(), diff.is_zero() ? 0 : padic_valuation(diff, p)});
        }
        std::ostringstream label;
        label << "binom j=" << j << " p=" << p << " target=" << target.str();
        emit(render_valuations(rows, format, label.str()), out_path);
        return 0;
    }
    if (check == "mahler") {
        std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
        c[static_cast<size_t>(k)] = Rat(1);
        Rat got = mahler_integral(RatPoly(c));
        Rat want = apostol_bernoulli_poly(Rat(0), Rat(1), k)[static_cast<size_t>(k)];
        std::ostringstream os;
        os << "mahler k=" << k << " integral=" << got.str() << " bernoulli=" << want.str()
           << " match=" << (got == want ? "yes" : "no") << "\n";
        emit(os.str(), out_path);
        return got == want ? 0 : 1;
    }
    if (check == "daehee" || check == "changhee") {
        RepKind kind = check == "daehee" ? RepKind::Daehee : RepKind::Changhee;
        auto rows = integral_rep_check(kind, parse_character(chi_spec), Rat::parse(lambda_s),
                                       Rat::parse(q_s), n, p, Nmax);
        std::ostringstream label;
        label << check << " rep chi=" << chi_spec << " lambda=" << lambda_s << " q=" << q_s
              << " n=" << n << " p=" << p;
        emit(render_valuations(rows, format, label.str()), out_path);
        return 0;
    }
    if (check == "translation") {
        std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
        c[static_cast<size_t>(k)] = Rat(1);
        auto rep = translation_check(RatPoly(c), m, p, Nmax);
        std::ostringstream os;
        os << rep.theorem << " [" << rep.params << "] " << rep.status << " " << rep.note << "\n";
        emit(os.str(), out_path);
        return rep.status == "PASS" ? 0 : 1;
    }
    throw std::invalid_argument("unknown padic check: " + check);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables, identity verification and p-adic experiments for "
                 "Apostol-Daehee/Changhee families"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "emit a family value table");
    std::string t_family, t_chi = "trivial", t_format = "text", t_out;
    std::optional<std::string> t_lambda, t_q, t_x, t_u, t_z;
    std::optional<long> t_v;
    int t_maxn = 8;
    table->add_option("--family", t_family, "family id")->required();
    table->add_option("--chi", t_chi, "character spec (trivial | kronecker:D | mod:d:index)");
    table->add_option("--lambda", t_lambda, "lambda as a/b");
    table->add_option("--q", t_q, "q as a/b, or limit1");
    table->add_option("--x", t_x, "polynomial argument as a/b");
    table->add_option("--u", t_u, "Frobenius-Euler parameter as a/b");
    table->add_option("--v", t_v, "Stirling / array index");
    table->add_option("--z", t_z, "Daehee/Changhee polynomial argument as a/b");
    table->add_option("--max-n", t_maxn, "largest index");
    table->add_option("--format", t_format, "json | csv | text");
    table->add_option("--output", t_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity registry");
    std::string v_theorem, v_format = "json", v_out;
    std::optional<std::string> v_chi, v_lambda, v_q;
    int v_maxm = 10;
    verify->add_option("--theorem", v_theorem, "registry id or all")->required();
    verify->add_option("--chi", v_chi, "character spec");
    verify->add_option("--lambda", v_lambda, "lambda as a/b");
    verify->add_option("--q", v_q, "q as a/b, or limit1");
    verify->add_option("--max-n,--max-m", v_maxm, "largest index checked");
    verify->add_option("--format", v_format, "json | csv | text");
    verify->add_option("--output", v_out, "output path (default stdout)");

    // padic
    auto* padic = app.add_subcommand("padic", "p-adic partial-sum experiments");
    std::string p_check, p_z = "0", p_lambda = "1", p_q = "1", p_chi = "trivial",
                p_format = "text", p_out;
    long p_p = 5, p_j = 0;
    int p_n = 0, p_k = 0, p_Nmax = 6, p_m = 1;
    padic->add_option("--check", p_check,
                      "witt-bosonic | witt-fermionic | binom | mahler | daehee | changhee | "
                      "translation")
        ->required();
    padic->add_option("--p", p_p, "prime");
    padic->add_option("--n", p_n, "degree / index");
    padic->add_option("--j", p_j, "binomial index");
    padic->add_option("--k", p_k, "polynomial degree");
    padic->add_option("--z", p_z, "shift as a/b");
    padic->add_option("--lambda", p_lambda, "lambda as a/b");
    padic->add_option("--q", p_q, "q as a/b");
    padic->add_option("--chi", p_chi, "character spec");
    padic->add_option("--Nmax,--N", p_Nmax, "largest level");
    padic->add_option("--m", p_m, "translation shift");
    padic->add_option("--format", p_format, "json | csv | text");
    padic->add_option("--output", p_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed())
            return run_table(t_family, t_chi, t_lambda, t_q, t_x, t_u, t_v, t_z, t_maxn, t_format,
                             t_out);
        if (verify->parsed())
            return run_verify(v_theorem, v_chi, v_lambda, v_q, v_maxm, v_format, v_out);
        if (padic->parsed())
            return run_padic(p_check, p_p, p_n, p_j, p_k, p_z, p_lambda, p_q, p_chi, p_Nmax, p_m,
                             p_format, p_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
