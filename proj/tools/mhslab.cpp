// mhslab: exact verification of multiple-harmonic-sum identities, prime-power
// congruences, and zeta-value evaluations, at desk scale.
//
// Exit codes: 0 all checks passed, 1 mathematical counterexample or tolerance
// failure, 2 usage or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "mhs/congruence.hpp"
#include "mhs/euler.hpp"
#include "mhs/identities.hpp"
#include "mhs/report.hpp"
#include "mhs/series_check.hpp"
#include "mhs/sums.hpp"

using namespace mhslab;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr long kMaxN = 200;      // desk-scale caps
constexpr long kMaxPrime = 500;
constexpr long kMaxWeight = 11;

struct GlobalOpts {
    std::string format = "pretty";
    long precision = 256;
    unsigned jobs = 1;
    unsigned long seed = 0;
    long sample = 0;
    bool no_timing = false;
    bool oracle = false;

    OutputFormat fmt() const {
        if (format == "json") return OutputFormat::json;
        if (format == "tsv") return OutputFormat::tsv;
        return OutputFormat::pretty;
    }
    Engine engine() const { return oracle ? Engine::oracle : Engine::fast; }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(text);
            return Range{v, v};
        }
        return Range{std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("cannot parse range '" + text + "' (expected N or LO..HI)");
    }
}

void check_cap(const Range& r, long cap, const std::string& name) {
    if (r.size() == 0) throw UsageError("empty range for --" + name);
    if (r.hi > cap || r.lo < -cap)
        throw UsageError("--" + name + " exceeds the desk-scale cap " + std::to_string(cap));
}

// generic over-ranges runner with precondition filtering
template <typename Point, typename Eval, typename Emit>
int run_filtered(const std::vector<Point>& points, Eval eval, Emit emit, bool& any_fail) {
    std::size_t evaluated = 0, skipped = 0;
    for (const Point& pt : points) {
        try {
            any_fail |= !emit(eval(pt));
            ++evaluated;
        } catch (const std::invalid_argument&) {
            ++skipped;
        }
    }
    if (evaluated == 0)
        throw UsageError("no grid point satisfies the preconditions (skipped " +
                         std::to_string(skipped) + ")");
    return 0;
}

// ---------- verify ----------

int cmd_verify(const GlobalOpts& g, const std::string& tag,
               const std::map<std::string, std::string>& range_args) {
    auto id = parse_identity(tag);
    if (!id) throw UsageError("unknown identity tag '" + tag + "'");
    ParamRanges ranges;
    for (const auto& [key, text] : range_args) {
        if (text.empty()) continue;
        Range r = parse_range(text);
        check_cap(r, key == "n" ? kMaxN : kMaxWeight, key);
        ranges[key] = r;
    }

    std::vector<Params> points = sweep_points(*id, ranges);
    if (g.sample > 0 && g.sample < static_cast<long>(points.size())) {
        std::vector<Params> picked;
        std::mt19937 rng(g.seed);
        std::sample(points.begin(), points.end(), std::back_inserter(picked),
                    static_cast<std::size_t>(g.sample), rng);
        points = std::move(picked);
    }

    if (g.fmt() == OutputFormat::tsv) std::cout << tsv_header_verification() << '\n';
    SweepSummary summary;
    std::vector<Params> valid;
    for (Params& p : points) {
        try {
            validate_params(*id, p);
            valid.push_back(std::move(p));
        } catch (const std::invalid_argument&) {
            ++summary.skipped;
        }
    }
    if (valid.empty())
        throw UsageError("no grid point satisfies the constraints (skipped " +
                         std::to_string(summary.skipped) + ")");
    std::vector<VerificationReport> reports = verify_points(*id, valid, g.engine(), g.jobs);
    summary.evaluated = reports.size();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!reports[i].equal) {
            summary.all_passed = false;
            summary.counterexamples.push_back(i);
        }
        std::cout << format_report(reports[i], g.fmt(), !g.no_timing) << '\n';
    }
    std::cout << format_summary(summary, g.fmt()) << '\n';
    return summary.all_passed ? 0 : 1;
}

// ---------- congruence ----------

int cmd_congruence(const GlobalOpts& g, const std::string& check,
                   const std::string& p_text,
                   const std::map<std::string, std::string>& range_args) {
    if (p_text.empty()) throw UsageError("--p is required");
    Range pr = parse_range(p_text);
    check_cap(pr, kMaxPrime, "p");

    std::map<std::string, Range> ranges;
    std::vector<std::string> keys;
    if (check == "wolstenholme") keys = {"a"};
    else if (check == "i" || check == "ii" || check == "iii" || check == "iv") keys = {"m", "n"};
    else if (check == "lemma") keys = {"m", "n", "r"};
    else if (check == "thm4-half" || check == "thm4-full") keys = {"a", "b"};
    else throw UsageError("unknown congruence check '" + check + "'");

    for (const auto& key : keys) {
        auto it = range_args.find(key);
        if (it == range_args.end() || it->second.empty())
            throw UsageError("--" + key + " is required for check '" + check + "'");
        Range r = parse_range(it->second);
        check_cap(r, kMaxWeight, key);
        ranges[key] = r;
    }

    std::vector<long> primes;
    for (long p = std::max(2L, pr.lo); p <= pr.hi; ++p)
        if (is_prime(p)) primes.push_back(p);
    if (primes.empty()) throw UsageError("no primes in the requested range");

    // grid in canonical order: p outermost, then keys in declared order
    std::vector<std::vector<long>> grid;
    for (long p : primes) {
        std::vector<std::vector<long>> rows{{p}};
        for (const auto& key : keys) {
            std::vector<std::vector<long>> next;
            for (const auto& row : rows)
                for (long v = ranges[key].lo; v <= ranges[key].hi; ++v) {
                    auto r = row;
                    r.push_back(v);
                    next.push_back(std::move(r));
                }
            rows = std::move(next);
        }
        grid.insert(grid.end(), rows.begin(), rows.end());
    }

    auto eval = [&](const std::vector<long>& row) -> CongruenceReport {
        long p = row[0];
        if (check == "wolstenholme") return wolstenholme_check(p, row[1]);
        if (check == "i") return cong_i(p, row[1], row[2]);
        if (check == "ii") return cong_ii(p, row[1], row[2]);
        if (check == "iii") return cong_iii(p, row[1], row[2]);
        if (check == "iv") return cong_iv(p, row[1], row[2]);
        if (check == "lemma") return lemma_check(p, row[1], row[2], row[3]);
        if (check == "thm4-half") return thm4_half(p, row[1], row[2]);
        return thm4_full(p, row[1], row[2]);
    };

    if (g.fmt() == OutputFormat::tsv) std::cout << tsv_header_congruence() << '\n';
    bool any_fail = false;
    run_filtered(grid, eval,
                 [&](const CongruenceReport& rep) {
                     std::cout << format_report(rep, g.fmt()) << '\n';
                     return rep.pass;
                 },
                 any_fail);
    return any_fail ? 1 : 0;
}

// ---------- series ----------

std::string series_line(const GlobalOpts& g, const std::string& check,
                        const std::map<std::string, long>& params, const Rational& lhs,
                        const Rational& rhs, bool equal) {
    if (g.fmt() == OutputFormat::json) {
        ordered_json j;
        j["check"] = check;
        ordered_json pj = ordered_json::object();
        for (const auto& [k, v] : params) pj[k] = v;
        j["params"] = pj;
        j["lhs"] = to_string(lhs);
        j["rhs"] = to_string(rhs);
        j["equal"] = equal;
        return j.dump();
    }
    std::string ps;
    for (const auto& [k, v] : params) ps += k + "=" + std::to_string(v) + " ";
    if (g.fmt() == OutputFormat::tsv)
        return check + "\t" + ps + "\t" + to_string(lhs) + "\t" + to_string(rhs) + "\t" +
               (equal ? "true" : "false");
    return std::string(equal ? "ok   " : "FAIL ") + check + " " + ps + " lhs = " + to_string(lhs) +
           "  rhs = " + to_string(rhs);
}

int cmd_series(const GlobalOpts& g, const std::string& sub,
               const std::map<std::string, std::string>& range_args, long pad) {
    auto range_of = [&](const std::string& key, long def_lo, long def_hi) {
        auto it = range_args.find(key);
        if (it == range_args.end() || it->second.empty()) return Range{def_lo, def_hi};
        Range r = parse_range(it->second);
        check_cap(r, key == "n" ? kMaxN : kMaxWeight, key);
        return r;
    };
    bool all_ok = true;
    std::size_t evaluated = 0;
    if (sub == "gf2") {
        Range nr = range_of("n", 0, 4), rr = range_of("r", 1, 3), dr = range_of("d", 1, 3);
        for (long n = nr.lo; n <= nr.hi; ++n)
            for (long r = rr.lo; r <= rr.hi; ++r)
                for (long d = dr.lo; d <= dr.hi; ++d) {
                    if (r < 1 || d < 1 || n < 0) continue;
                    Rational lhs = gf2_lhs(n, r, d), rhs = gf2_rhs(n, r, d, pad);
                    bool eq = lhs == rhs;
                    all_ok &= eq;
                    ++evaluated;
                    std::cout << series_line(g, "gf2", {{"n", n}, {"r", r}, {"d", d}}, lhs, rhs, eq)
                              << '\n';
                }
    } else if (sub == "thm1") {
        Range nr = range_of("n", 1, 4), rr = range_of("r", 1, 3), dr = range_of("d", 1, 3);
        for (long n = nr.lo; n <= nr.hi; ++n)
            for (long r = rr.lo; r <= rr.hi; ++r)
                for (long d = dr.lo; d <= dr.hi; ++d) {
                    if (n < 1 || r < 1 || d < 1) continue;
                    bool eq = thm1_series_check(n, r, d, pad);
                    all_ok &= eq;
                    ++evaluated;
                    if (g.fmt() == OutputFormat::json) {
                        ordered_json j;
                        j["check"] = "thm1";
                        j["params"] = {{"n", n}, {"r", r}, {"d", d}};
                        j["equal"] = eq;
                        std::cout << j.dump() << '\n';
                    } else {
                        std::cout << (eq ? "ok   " : "FAIL ") << "thm1 n=" << n << " r=" << r
                                  << " d=" << d << '\n';
                    }
                }
    } else if (sub == "specializations") {
        Range nr = range_of("n", 1, 5), ar = range_of("a", 1, 2), br = range_of("b", 1, 2);
        for (long n = nr.lo; n <= nr.hi; ++n)
            for (long a = ar.lo; a <= ar.hi; ++a)
                for (long b = br.lo; b <= br.hi; ++b) {
                    if (n < 1 || a < 1 || b < 1) continue;
                    auto res = specialization_checks(n, a, b);
                    bool eq = res.even_case && res.odd_case;
                    all_ok &= eq;
                    ++evaluated;
                    if (g.fmt() == OutputFormat::json) {
                        ordered_json j;
                        j["check"] = "specializations";
                        j["params"] = {{"n", n}, {"a", a}, {"b", b}};
                        j["even_case"] = res.even_case;
                        j["odd_case"] = res.odd_case;
                        std::cout << j.dump() << '\n';
                    } else {
                        std::cout << (eq ? "ok   " : "FAIL ") << "specializations n=" << n
                                  << " a=" << a << " b=" << b << " even=" << res.even_case
                                  << " odd=" << res.odd_case << '\n';
                    }
                }
    } else {
        throw UsageError("unknown series subcommand '" + sub + "'");
    }
    if (evaluated == 0) throw UsageError("no grid point satisfies the constraints");
    return all_ok ? 0 : 1;
}

// ---------- zeta ----------

int cmd_zeta_r_infty(const GlobalOpts& g, long a, long b, bool check_numeric, long max_n,
                     const std::string& tol_text) {
    if (2 * (a + b) - 1 > kMaxWeight) throw UsageError("weight 2(a+b)-1 exceeds the desk-scale cap");
    ZetaExpr expr = r_infty_symbolic(a, b);
    if (g.fmt() == OutputFormat::json) {
        ordered_json j;
        j["check"] = "r-infty";
        j["a"] = a;
        j["b"] = b;
        j["expr"] = expr.str();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << expr.str() << '\n';
    }
    if (!check_numeric) return 0;

    HpReal sym = zeta_expr_eval(expr, g.precision);
    ExtrapolationResult est = r_partial_extrapolate(a, b, max_n, g.precision);
    HpReal diff = (sym - est.value).abs();
    HpReal tolerance = HpReal::from_string(tol_text, g.precision);
    bool ok = est.converged && diff <= tolerance;
    if (g.fmt() == OutputFormat::json) {
        ordered_json j;
        j["symbolic_value"] = sym.str(30);
        j["extrapolated"] = est.value.str(30);
        j["abs_diff"] = diff.str(10);
        j["tolerance"] = tol_text;
        j["fitted_exponent"] = est.fitted_exponent;
        j["converged"] = est.converged;
        j["pass"] = ok;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "symbolic     = " << sym.str(30) << '\n'
                  << "extrapolated = " << est.value.str(30) << '\n'
                  << "abs diff     = " << diff.str(10) << " (tolerance " << tol_text << ")\n"
                  << "fitted tail exponent = " << est.fitted_exponent << '\n'
                  << (ok ? "ok" : "FAIL") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_zeta_euler(const GlobalOpts& g, long m, long n, long terms, const std::string& tol_text) {
    if (std::labs(m) + std::labs(n) > kMaxWeight)
        throw UsageError("weight |m|+|n| exceeds the desk-scale cap");
    EulerNumeric num = euler_sum_numeric(m, n, g.precision, terms);  // divergence guard first
    std::string sym_str;
    HpReal diff(g.precision);
    bool have_sym = false;
    try {
        ZetaExpr sym = euler_sum_symbolic(m, n);
        sym_str = sym.str();
        diff = (zeta_expr_eval(sym, g.precision) - num.value).abs();
        have_sym = true;
    } catch (const std::invalid_argument&) {
        // even weight or outside the tabulated boundary forms: numeric only
    }
    if (g.fmt() == OutputFormat::json) {
        ordered_json j;
        j["check"] = "euler";
        j["m"] = m;
        j["n"] = n;
        j["value"] = num.value.str(40);
        j["error_estimate"] = num.error_estimate.str(5);
        j["terms"] = num.terms_used;
        if (have_sym) {
            j["expr"] = sym_str;
            j["abs_diff"] = diff.str(5);
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "H(" << m << "," << n << ") = " << num.value.str(40)
                  << "   (acceleration error estimate " << num.error_estimate.str(5) << ")\n";
        if (have_sym)
            std::cout << "closed form: " << sym_str << "   |numeric - symbolic| = " << diff.str(5)
                      << '\n';
    }
    if (have_sym && !tol_text.empty())
        return diff <= HpReal::from_string(tol_text, g.precision) ? 0 : 1;
    return 0;
}

int cmd_zeta_estimate(const GlobalOpts& g, long a, long b, long max_n) {
    ExtrapolationResult est = r_partial_extrapolate(a, b, max_n, g.precision);
    if (g.fmt() == OutputFormat::json) {
        ordered_json j;
        j["check"] = "estimate";
        j["a"] = a;
        j["b"] = b;
        j["max_n"] = max_n;
        j["value"] = est.value.str(30);
        j["error_estimate"] = est.error_estimate.str(5);
        j["fitted_exponent"] = est.fitted_exponent;
        j["converged"] = est.converged;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "R_infty(" << a << "," << b << ") ~ " << est.value.str(30) << "  +/- "
                  << est.error_estimate.str(5) << "  (fitted tail exponent "
                  << est.fitted_exponent << ", ladder to " << max_n << ")\n";
    }
    return est.converged ? 0 : 1;
}

// ---------- compositions ----------

int cmd_compositions(const GlobalOpts& g, const std::string& text) {
    Signature t = parse_signature(text);
    if (t.empty() || !t.all_positive())
        throw std::invalid_argument("compositions: signature must be nonempty and positive");
    if (t.weight() > kMaxWeight) throw UsageError("signature weight exceeds the desk-scale cap");
    auto cs = compositions(t);
    for (const auto& s : cs) {
        if (g.fmt() == OutputFormat::json) {
            ordered_json j;
            j["signature"] = s.str();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << s.str() << '\n';
        }
    }
    if (g.fmt() == OutputFormat::json) {
        ordered_json j;
        j["count"] = cs.size();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "count: " << cs.size() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiple harmonic sum identity, congruence, and zeta-value verifier"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("MHSLAB_PRECISION")) g.precision = std::atol(env);
    app.add_option("--format", g.format, "output format: pretty, json, tsv")
        ->check(CLI::IsMember({"pretty", "json", "tsv"}));
    app.add_option("--precision", g.precision, "working precision in bits (default 256)");
    app.add_option("--jobs", g.jobs, "parallel evaluation degree");
    app.add_option("--seed", g.seed, "seed for --sample");
    app.add_option("--sample", g.sample, "evaluate only K seeded-random grid points");
    app.add_flag("--no-timing", g.no_timing, "zero elapsed_ms fields for byte-stable output");
    app.add_flag("--oracle", g.oracle, "force brute-force evaluation paths");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "sweep an identity over parameter ranges");
    std::string tag;
    std::map<std::string, std::string> vr{{"n", ""}, {"r", ""}, {"d", ""}, {"a", ""}, {"b", ""}};
    verify_cmd->add_option("tag", tag, "identity tag: i1..i7, c1..c3")->required();
    for (auto& [k, v] : vr)
        verify_cmd->add_option("--" + k, v, "range for " + k + " (N or LO..HI)");

    // congruence
    auto* cong_cmd = app.add_subcommand("congruence", "verify a congruence over primes");
    std::string check, p_text;
    std::map<std::string, std::string> cr{{"m", ""}, {"n", ""}, {"r", ""}, {"a", ""}, {"b", ""}};
    cong_cmd->add_option("check", check,
                         "one of: wolstenholme, i, ii, iii, iv, lemma, thm4-half, thm4-full")
        ->required();
    cong_cmd->add_option("--p", p_text, "prime range (primes enumerated by trial division)")
        ->required();
    for (auto& [k, v] : cr) cong_cmd->add_option("--" + k, v, "range for " + k);

    // series
    auto* series_cmd = app.add_subcommand("series", "verify truncated power-series identities");
    std::string series_sub;
    long pad = 0;
    std::map<std::string, std::string> sr{{"n", ""}, {"r", ""}, {"d", ""}, {"a", ""}, {"b", ""}};
    series_cmd->add_option("sub", series_sub, "gf2, thm1, or specializations")->required();
    for (auto& [k, v] : sr) series_cmd->add_option("--" + k, v, "range for " + k);
    series_cmd->add_option("--pad", pad, "extra truncation order beyond the minimum");

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "closed forms and numerics for infinite sums");
    zeta_cmd->require_subcommand(1);
    auto* ri_cmd = zeta_cmd->add_subcommand("r-infty", "closed form of the exotic sum limit");
    long za = 1, zb = 2, max_n = 4096, terms = 0, em = 2, en = -1;
    bool check_numeric = false;
    std::string tol_text = "1e-8", euler_tol;
    ri_cmd->add_option("--a", za)->required();
    ri_cmd->add_option("--b", zb)->required();
    ri_cmd->add_flag("--check-numeric", check_numeric,
                     "cross-check against the extrapolated partial sums");
    ri_cmd->add_option("--max-n", max_n, "extrapolation ladder top (default 4096)");
    ri_cmd->add_option("--tol", tol_text, "numeric tolerance (default 1e-8)");
    auto* euler_cmd = zeta_cmd->add_subcommand("euler", "depth-2 Euler sum H(m,n), signed slots");
    euler_cmd->add_option("--m", em, "first slot (sign marks the alternating index)")->required();
    euler_cmd->add_option("--n", en, "second slot")->required();
    euler_cmd->add_option("--terms", terms, "acceleration terms (0 = automatic)");
    euler_cmd->add_option("--tol", euler_tol, "fail (exit 1) if |numeric - symbolic| exceeds this");
    auto* est_cmd = zeta_cmd->add_subcommand("estimate", "extrapolate exact partial sums R_n(a,b)");
    est_cmd->add_option("--a", za)->required();
    est_cmd->add_option("--b", zb)->required();
    est_cmd->add_option("--max-n", max_n, "ladder top (default 4096)");

    // compositions
    auto* comp_cmd = app.add_subcommand("compositions", "list all coarsenings of a signature");
    std::string sig_text;
    comp_cmd->add_option("signature", sig_text, "e.g. \"(1,1,1,2)\" or \"{2}^3\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (g.precision < 64 || g.precision > 16384)
            throw UsageError("--precision must be in [64, 16384]");
        if (verify_cmd->parsed()) return cmd_verify(g, tag, vr);
        if (cong_cmd->parsed()) return cmd_congruence(g, check, p_text, cr);
        if (series_cmd->parsed()) return cmd_series(g, series_sub, sr, pad);
        if (zeta_cmd->parsed()) {
            if (ri_cmd->parsed())
                return cmd_zeta_r_infty(g, za, zb, check_numeric, max_n, tol_text);
            if (euler_cmd->parsed()) return cmd_zeta_euler(g, em, en, terms, euler_tol);
            if (est_cmd->parsed()) return cmd_zeta_estimate(g, za, zb, max_n);
        }
        if (comp_cmd->parsed()) return cmd_compositions(g, sig_text);
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "guard error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
