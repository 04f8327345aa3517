#pragma once

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verify.hpp"

namespace hecke {

namespace cli_detail {

inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

// q = p or p^2 with p > 3 prime; throws std::invalid_argument otherwise.
inline Field field_for_q(std::int64_t q) {
    if (q > 3 && is_prime(q)) return Field(q, 1);
    const std::int64_t r = isqrt64(std::max<std::int64_t>(q, 0));
    if (q > 0 && r * r == q && r > 3 && is_prime(r)) return Field(r, 2);
    throw std::invalid_argument("q must be p or p^2 for a prime p > 3");
}

inline std::vector<CharIndex> parse_indices(const std::string& csv) {
    std::vector<CharIndex> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty character index");
        out.push_back({std::stoll(item)});
    }
    if (out.empty()) throw std::invalid_argument("no character indices given");
    return out;
}

// x accepts "t=<int>", a bare integer, or "a,b" coordinates.
inline FieldElem parse_elem(const Field& f, std::string s) {
    if (s.rfind("t=", 0) == 0) s = s.substr(2);
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return f.from_int(std::stoll(s));
        FieldElem e = f.from_int(std::stoll(s.substr(0, comma)));
        FieldElem hi = f.from_int(std::stoll(s.substr(comma + 1)));
        if (f.degree() == 1) {
            if (!f.is_zero(hi)) throw std::invalid_argument("coordinate pair needs a degree-2 field");
            return e;
        }
        return {e.a, hi.a};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("cannot parse field element '" + s + "'");
    }
}

struct TraceArgs {
    std::int64_t k = 0, p = 0;
    std::string method = "all";
    std::string format = "text";
};

inline int cmd_trace(const TraceArgs& a, const std::string& echo, std::ostream& out) {
    if (a.p <= 3 || !is_prime(a.p))
        throw std::invalid_argument("trace: p must be a prime > 3");
    if (a.k < 2 || a.k % 2 != 0)
        throw std::invalid_argument("trace: k must be even and >= 2");
    const int k = static_cast<int>(a.k);
    TraceContext ctx(a.p);

    if (a.method != "all") {
        if (k == 2 && a.method != "hijikata" && a.method != "oracle")
            throw std::invalid_argument("trace: k=2 is only defined for --method hijikata|oracle");
        Int v;
        if (a.method == "pointcount") v = ctx.pointcount(k);
        else if (a.method == "hijikata") v = ctx.hijikata(k);
        else if (a.method == "hyp") v = ctx.hypergeometric(k);
        else if (a.method == "recursion") v = ctx.recursive(k);
        else if (a.method == "oracle") v = ctx.oracle(k);
        else throw std::invalid_argument("trace: unknown method '" + a.method + "'");
        if (a.format == "json")
            out << "{\"schema\":1,\"command\":\"" << json_escape(echo) << "\",\"k\":" << k
                << ",\"p\":" << a.p << ",\"trace\":" << v << "}\n";
        else
            out << v << "\n";
        return 0;
    }

    if (k == 2)
        throw std::invalid_argument("trace: k=2 is only defined for --method hijikata|oracle");
    TraceReport rep = ctx.full_report(k, true);
    if (a.format == "json") {
        out << "{\"schema\":1,\"command\":\"" << json_escape(echo) << "\",\"k\":" << k
            << ",\"p\":" << a.p << ",\"routes\":{";
        out << "\"pointcount\":" << *rep.pointcount << ",\"hijikata\":" << *rep.hijikata
            << ",\"hyp\":" << *rep.hypergeometric << ",\"recursion\":" << *rep.recursive
            << ",\"oracle\":" << *rep.oracle << "},\"agree\":" << (rep.agree ? "true" : "false");
        if (rep.agree) out << ",\"trace\":" << *rep.pointcount;
        out << "}\n";
    } else {
        auto line = [&out](const char* name, const std::optional<Int>& v) {
            out << name << "=";
            if (v) out << *v; else out << "failed";
            out << "\n";
        };
        line("pointcount", rep.pointcount);
        line("hijikata", rep.hijikata);
        line("hyp", rep.hypergeometric);
        line("recursion", rep.recursive);
        line("oracle", rep.oracle);
        out << "agree=" << (rep.agree ? "true" : "false") << "\n";
    }
    if (!rep.agree) {
        if (!rep.failed_route.empty())
            throw check_error("trace: route '" + rep.failed_route + "' failed at k=" +
                              std::to_string(k) + " p=" + std::to_string(a.p));
        throw check_error("trace: routes disagree at k=" + std::to_string(k) +
                          " p=" + std::to_string(a.p));
    }
    return 0;
}

struct TableArgs {
    std::int64_t kmin = 0, kmax = 0, pmax = 0;
    std::string format = "csv";
};

inline int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.kmin < 4 || a.kmax < a.kmin || a.kmin % 2 != 0 || a.kmax % 2 != 0)
        throw std::invalid_argument("table: need even 4 <= kmin <= kmax");
    if (a.pmax < 0 || a.pmax > 10000)
        throw std::invalid_argument("table: pmax out of range [0, 10000]");
    struct Row {
        std::int64_t k, p;
        Int trace;
    };
    std::vector<Row> rows;
    for (std::int64_t p : primes_up_to(a.pmax)) {
        if (p <= 3) continue;
        TraceContext ctx(p);
        for (std::int64_t k = a.kmin; k <= a.kmax; k += 2) {
            Int pc = ctx.pointcount(static_cast<int>(k));
            Int hj = ctx.hijikata(static_cast<int>(k));
            if (pc != hj)
                throw check_error("table: routes disagree at (k,p)=(" + std::to_string(k) +
                                  "," + std::to_string(p) + ")");
            rows.push_back({k, p, pc});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) {
        return l.k != r.k ? l.k < r.k : l.p < r.p;
    });
    if (a.format == "json") {
        out << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out << ",";
            out << "\n  {\"k\":" << rows[i].k << ",\"p\":" << rows[i].p
                << ",\"trace\":" << rows[i].trace << ",\"verified\":true}";
        }
        out << (rows.empty() ? "]\n" : "\n]\n");
    } else {
        out << "k,p,trace,verified\n";
        for (const auto& r : rows)
            out << r.k << "," << r.p << "," << r.trace << ",true\n";
    }
    return 0;
}

struct HypArgs {
    std::int64_t q = 0;
    std::string top, bottom, x;
};

inline int cmd_hyp(const HypArgs& a, std::ostream& out) {
    Field f = field_for_q(a.q);
    CharTable tab(f);
    HypSpec spec{parse_indices(a.top), parse_indices(a.bottom), parse_elem(f, a.x)};
    const Cplx v = hyp_eval(tab, spec);
    out << fmt12(v.real()) << " " << fmt12(v.imag()) << " generator="
        << f.to_string(f.generator()) << "\n";
    return 0;
}

struct CurveArgs {
    std::int64_t p = 0, t = 0;
};

inline int cmd_curve(const CurveArgs& a, std::ostream& out) {
    if (a.p <= 3 || !is_prime(a.p))
        throw std::invalid_argument("curve: p must be a prime > 3");
    Field fp(a.p, 1), fq(a.p, 2);
    const FieldElem t1 = fp.from_int(a.t);
    if (fp.is_zero(t1) || t1 == fp.one())
        throw std::invalid_argument("curve: t must avoid 0 and 1 mod p");
    const CurveTrace c1 = frobenius_trace(fp, t1);
    const CurveTrace c2 = frobenius_trace(fq, fq.from_int(a.t));
    out << "t=" << a.t << " p=" << a.p << " a_p=" << c1.a << " npoints_p=" << c1.npoints
        << " a_p2=" << c2.a << " npoints_p2=" << c2.npoints << "\n";
    return 0;
}

struct VerifyArgs {
    std::int64_t pmax = 50;
    std::int64_t kmax = 26;
    double tol = 1e-9;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.pmax > 200) throw std::invalid_argument("verify: pmax must be <= 200 (guard rail)");
    if (a.kmax > 26) throw std::invalid_argument("verify: kmax must be <= 26 (guard rail)");
    VerifyOptions opt;
    opt.pmax = a.pmax;
    opt.kmax = static_cast<int>(a.kmax);
    opt.tol = a.tol;
    const auto results = run_verification(opt);
    int failures = 0;
    for (const auto& r : results) {
        if (r.pass) {
            out << "PASS " << r.family << (r.detail.empty() ? "" : " (" + r.detail + ")")
                << "\n";
        } else {
            out << "FAIL " << r.family << ": " << r.detail << "\n";
            ++failures;
        }
    }
    out << results.size() - failures << "/" << results.size() << " families passed\n";
    if (failures) throw check_error("verification failed (" + std::to_string(failures) +
                                    " families)");
    return 0;
}

}  // namespace cli_detail

// Entry point shared by the binary and the tests. Exit codes: 0 success,
// 1 usage error, 2 mathematical disagreement/consistency failure.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Traces of Hecke operators on level-1 cusp forms"};
    app.require_subcommand(1);

    cli_detail::TraceArgs ta;
    auto* trace = app.add_subcommand("trace", "Compute Tr_k(p) by one or all routes");
    trace->add_option("--k", ta.k, "even weight")->required();
    trace->add_option("--p", ta.p, "prime > 3")->required();
    trace->add_option("--method", ta.method, "pointcount|hijikata|hyp|recursion|oracle|all")
        ->check(CLI::IsMember({"pointcount", "hijikata", "hyp", "recursion", "oracle", "all"}));
    trace->add_option("--format", ta.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    cli_detail::TableArgs ba;
    auto* table = app.add_subcommand("table", "Tabulate traces over a (k,p) range");
    table->add_option("--kmin", ba.kmin, "even weight >= 4")->required();
    table->add_option("--kmax", ba.kmax, "even weight >= kmin")->required();
    table->add_option("--pmax", ba.pmax, "upper bound for p")->required();
    table->add_option("--format", ba.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    cli_detail::HypArgs ha;
    auto* hyp = app.add_subcommand("hyp", "Evaluate a Greene hypergeometric function");
    hyp->add_option("--q", ha.q, "p or p^2, prime p > 3")->required();
    hyp->add_option("--top", ha.top, "comma-separated character indices")->required();
    hyp->add_option("--bottom", ha.bottom, "comma-separated character indices")->required();
    hyp->add_option("--x", ha.x, "argument: t=<int>, <int>, or a,b")->required();

    cli_detail::CurveArgs ca;
    auto* curve = app.add_subcommand("curve", "Point counts for E_t over F_p and F_p^2");
    curve->add_option("--p", ca.p, "prime > 3")->required();
    curve->add_option("--t", ca.t, "family parameter, t != 0,1 mod p")->required();

    cli_detail::VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the invariant battery");
    verify->add_option("--pmax", va.pmax, "prime bound, <= 200");
    verify->add_option("--kmax", va.kmax, "weight bound, <= 26");
    verify->add_option("--tol", va.tol, "complex tolerance");

    std::vector<std::string> argv_store = args;
    std::vector<const char*> argv;
    argv.push_back("hecke");
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (trace->parsed()) return cli_detail::cmd_trace(ta, cli_detail::join_args(args), out);
        if (table->parsed()) return cli_detail::cmd_table(ba, out);
        if (hyp->parsed()) return cli_detail::cmd_hyp(ha, out);
        if (curve->parsed()) return cli_detail::cmd_curve(ca, out);
        if (verify->parsed()) return cli_detail::cmd_verify(va, out);
    } catch (const check_error& e) {
        err << "check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace hecke
