// zetamoments_cli.cpp
//
// Command-line harness: every operation of the library behind one binary
// with deterministic, fingerprinted reports. Numbers are serialized as
// decimal strings (exact rationals as "num/den"), so two runs with the
// same configuration produce byte-identical row sets; timestamps live
// outside the fingerprinted region.
//
// Exit codes: 0 success, 1 verify-all failure, 2 validation error,
// 3 completed with budget/tolerance diagnostics.

#include "CLI11.hpp"
#include "json.hpp"

#include "zetamoments/acceptance.hpp"
#include "zetamoments/arith.hpp"
#include "zetamoments/exactpoly.hpp"
#include "zetamoments/localseries.hpp"
#include "zetamoments/report.hpp"
#include "zetamoments/singular.hpp"
#include "zetamoments/zetanum.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kToolVersion = "1.0.0";

struct Envelope {
    std::string subcommand;
    std::string config_canonical;  // fingerprinted
    std::vector<ordered_json> rows;
    std::vector<std::string> diagnostics;

    std::string fingerprint() const {
        std::string acc = config_canonical;
        for (const auto& r : rows) acc += r.dump();
        return zm::report::fingerprint_hex(acc);
    }
};

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void write_output(const Envelope& env, const std::string& out_path,
                  const std::string& format) {
    std::string text;
    if (format == "csv") {
        // header from the union of keys of the first row
        if (!env.rows.empty()) {
            std::string header, sep;
            for (auto it = env.rows.front().begin(); it != env.rows.front().end(); ++it) {
                header += sep + it.key();
                sep = ",";
            }
            text += header + "\n";
            for (const auto& r : env.rows) {
                std::string line, s2;
                for (auto it = r.begin(); it != r.end(); ++it) {
                    line += s2 + (it.value().is_string()
                                      ? it.value().get<std::string>()
                                      : it.value().dump());
                    s2 = ",";
                }
                text += line + "\n";
            }
        }
        text += "# fingerprint " + env.fingerprint() + "\n";
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["tool"] = "zetamoments";
        j["version"] = kToolVersion;
        j["subcommand"] = env.subcommand;
        j["config"] = env.config_canonical;
        j["fingerprint"] = env.fingerprint();
        j["precision"] = {{"float", "decimal string, %.17g"},
                          {"rational", "exact num/den string"}};
        j["timestamp"] = now_iso8601();  // outside the fingerprinted region
        j["rows"] = env.rows;
        j["diagnostics"] = env.diagnostics;
        text = j.dump(2) + "\n";
    }
    if (out_path.empty() || out_path == "-") {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + out_path);
    }
}

fs::path resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* envv = std::getenv("ZETAMOMENTS_CACHE_DIR")) return envv;
    return fs::temp_directory_path() / "zetamoments-cache";
}

std::string fd(double v) { return zm::report::format_double(v); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for zeta-moment conjectures"};
    app.set_help_flag("--help", "print help");
    app.fallthrough();
    app.require_subcommand(1);
    std::string out_path, format, cache_flag;
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format,
                   "json or csv (default: csv for correlate/probe-*, else json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cache-dir", cache_flag,
                   "sieve cache directory (overrides ZETAMOMENTS_CACHE_DIR)");

    // wpoly
    auto* wpoly = app.add_subcommand("wpoly", "exact coefficients of w_k(eta)");
    unsigned wp_k = 2;
    std::string wp_variant = "statement";
    wpoly->add_option("--k", wp_k, "1 <= k <= 6")->required();
    wpoly->add_option("--variant", wp_variant, "statement | extra-recip | mk-display")
        ->check(CLI::IsMember({"statement", "extra-recip", "mk-display"}));

    // gamma
    auto* gammac = app.add_subcommand("gamma", "integer coefficients gamma_k(n)");
    unsigned gm_k = 2;
    gammac->add_option("--k", gm_k, "1 <= k <= 6")->required();

    // constants
    auto* constants = app.add_subcommand("constants", "Euler-product constants a_k");
    unsigned ak_k = 2;
    std::string ak_form = "both";
    std::uint64_t ak_P = 100000;
    constants->add_option("--k", ak_k)->required();
    constants->add_option("--form", ak_form, "eq10 | eq51 | both")
        ->check(CLI::IsMember({"eq10", "eq51", "both"}));
    constants->add_option("--P", ak_P, "prime cutoff (>= 100)");

    // correlate
    auto* correlate = app.add_subcommand("correlate", "additive divisor correlations");
    correlate->set_help_flag("--help", "print help");
    unsigned co_k = 2;
    std::vector<double> co_x;
    std::vector<std::uint64_t> co_h;
    std::uint64_t co_Q = 3000;
    double co_tol = 0;
    std::size_t co_order = 0;
    correlate->add_option("--k", co_k, "1 <= k <= 4")->required();
    correlate->add_option("--x", co_x, "x values")->required()->delimiter(',');
    correlate->add_option("--h", co_h, "shifts")->required()->delimiter(',');
    correlate->add_option("--Q", co_Q, "singular series cutoff");
    correlate->add_option("--tol", co_tol,
                          "requested relative uncertainty (0 = no check)");
    correlate->add_option("--series-order", co_order, "series order (default k+4)");

    // hstar
    auto* hstar = app.add_subcommand("hstar", "H* local identity report");
    unsigned hs_k = 2;
    std::uint64_t hs_pmax = 100;
    hstar->add_option("--k", hs_k, "1 <= k <= 4")->required();
    hstar->add_option("--pmax", hs_pmax, "largest prime");

    // proposition
    auto* prop = app.add_subcommand("proposition", "log a_k asymptotic trend");
    unsigned pr_kmax = 40;
    std::uint64_t pr_P = 100000;
    prop->add_option("--kmax", pr_kmax, "2 <= kmax <= 60");
    prop->add_option("--P", pr_P, "prime cutoff (>= 2 kmax^2)");

    // moments
    auto* moments = app.add_subcommand("moments", "moment integrals I_k");
    unsigned mo_k = 1;
    double mo_T = 1000, mo_T0 = 0;
    std::string mo_method = "auto";
    moments->add_option("--k", mo_k, "1 <= k <= 4 (3, 4 exploratory)")->required();
    moments->add_option("--T", mo_T, "upper endpoint")->required();
    moments->add_option("--T0", mo_T0, "lower endpoint (default 0)");
    moments->add_option("--method", mo_method, "auto | em | rs")
        ->check(CLI::IsMember({"auto", "em", "rs"}));

    // dpoly
    auto* dpoly = app.add_subcommand("dpoly", "Dirichlet polynomial mean square");
    unsigned dp_k = 1;
    std::uint64_t dp_N = 1000;
    double dp_T = 2000, dp_T0 = -1;
    dpoly->add_option("--k", dp_k)->required();
    dpoly->add_option("--N", dp_N, "polynomial length")->required();
    dpoly->add_option("--T", dp_T, "window start; integrates over [T, 2T]")->required();
    dpoly->add_option("--T0", dp_T0, "override lower endpoint");

    // probe-c2
    auto* probec2 = app.add_subcommand("probe-c2", "two-polynomial decomposition probe");
    double c2_T = 2000, c2_eta = 0;
    bool c2_mzero = false;
    probec2->add_option("--T", c2_T)->required();
    probec2->add_option("--eta", c2_eta, "length exponent (default 0)");
    probec2->add_flag("--mzero", c2_mzero, "one-polynomial branch N = 4T/2pi");

    // probe-c4
    auto* probec4 = app.add_subcommand("probe-c4", "long-polynomial mean square probe");
    unsigned c4_k = 1;
    double c4_eta = 0.5, c4_T = 500;
    probec4->add_option("--k", c4_k, "1 (acceptance) or 2 (exploratory)")->required();
    probec4->add_option("--eta", c4_eta, "N = T^{1+eta}")->required();
    probec4->add_option("--T", c4_T)->required();

    // series (debug): dump the local series coefficients
    auto* series = app.add_subcommand(
        "series", "debug: dump G_k(1+s,q), s^k zeta^k(1+s), and the P_k polynomial");
    unsigned se_k = 2;
    std::uint64_t se_q = 1;
    std::size_t se_order = 0;
    double se_tol = 1e-26;
    series->add_option("--k", se_k)->required();
    series->add_option("--q", se_q)->required();
    series->add_option("--order", se_order, "series order (default k+4)");
    series->add_option("--tol", se_tol, "coefficient tolerance");

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run the acceptance battery");
    bool vf_quick = false, vf_full = false;
    verify->add_flag("--quick", vf_quick, "exact/rational identities only (default)");
    verify->add_flag("--full", vf_full, "include sieve-scale and quadrature runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Envelope env;
    char cfg[512];
    const fs::path cache_dir = resolve_cache_dir(cache_flag);
    if (format.empty())
        format = (*correlate || *probec2 || *probec4) ? "csv" : "json";

    try {
        if (*wpoly) {
            if (wp_k < 1 || wp_k > 6) throw CLI::ValidationError("wpoly", "k must be 1..6");
            env.subcommand = "wpoly";
            const auto variant = wp_variant == "extra-recip"
                                     ? zm::exactpoly::WVariant::extra_recip_np1
                                     : wp_variant == "mk-display"
                                           ? zm::exactpoly::WVariant::mk_display
                                           : zm::exactpoly::WVariant::statement;
            std::snprintf(cfg, sizeof cfg, "wpoly;v1;k=%u;variant=%s", wp_k,
                          wp_variant.c_str());
            env.config_canonical = cfg;
            const auto w = zm::exactpoly::w_poly(wp_k, variant);
            for (std::size_t i = 0; i < w.coefficients().size(); ++i)
                env.rows.push_back({{"power", i},
                                    {"coefficient",
                                     zm::exactpoly::to_string(w.coefficients()[i])}});
        } else if (*gammac) {
            if (gm_k < 1 || gm_k > 6) throw CLI::ValidationError("gamma", "k must be 1..6");
            env.subcommand = "gamma";
            std::snprintf(cfg, sizeof cfg, "gamma;v1;k=%u", gm_k);
            env.config_canonical = cfg;
            const auto g = zm::exactpoly::gamma_table(gm_k);
            for (std::size_t n = 0; n < g.values.size(); ++n)
                env.rows.push_back({{"n", n}, {"gamma", g.values[n].get_str()}});
        } else if (*constants) {
            if (ak_k < 1 || ak_k > 60)
                throw CLI::ValidationError("constants", "k must be 1..60");
            env.subcommand = "constants";
            std::snprintf(cfg, sizeof cfg, "constants;v1;k=%u;form=%s;P=%llu", ak_k,
                          ak_form.c_str(), (unsigned long long)ak_P);
            env.config_canonical = cfg;
            const auto emit = [&](zm::singular::AkForm f, const char* name) {
                const auto a = zm::singular::a_k_eval(ak_k, ak_P, f);
                env.rows.push_back({{"k", ak_k},
                                    {"form", name},
                                    {"value", fd(a.value)},
                                    {"log_value", fd(a.log_value)},
                                    {"tail_bound", fd(a.tail_bound)},
                                    {"prime_cutoff", ak_P}});
            };
            if (ak_form != "eq51") emit(zm::singular::AkForm::eq10, "eq10");
            if (ak_form != "eq10") emit(zm::singular::AkForm::eq51, "eq51");
        } else if (*correlate) {
            if (co_k < 1 || co_k > 4)
                throw CLI::ValidationError("correlate", "k must be 1..4");
            env.subcommand = "correlate";
            std::string xs, hs;
            for (double x : co_x) xs += fd(x) + ";";
            for (auto h : co_h) hs += std::to_string(h) + ";";
            std::snprintf(cfg, sizeof cfg, "correlate;v1;k=%u;Q=%llu;order=%zu;x=%s;h=%s",
                          co_k, (unsigned long long)co_Q, co_order, xs.c_str(), hs.c_str());
            env.config_canonical = cfg;
            double xmax = 0;
            std::uint64_t hmax = 0;
            for (double x : co_x) xmax = std::max(xmax, x);
            for (auto h : co_h) hmax = std::max(hmax, h);
            const auto table = zm::arith::sieve_dk_cached(
                co_k, static_cast<std::uint64_t>(xmax) + hmax + 1, cache_dir);
            zm::singular::SingularSeriesEngine engine(
                {.k = co_k, .q_cutoff = co_Q, .order = co_order});
            const auto rows = zm::singular::correlation_report(engine, table, co_x, co_h);
            for (const auto& r : rows) {
                env.rows.push_back({{"k", r.k},
                                    {"x", fd(r.x)},
                                    {"h", r.h},
                                    {"predicted", fd(r.predicted)},
                                    {"uncertainty", fd(r.uncertainty)},
                                    {"actual", fd(r.actual)},
                                    {"rel_err", fd(r.rel_err)},
                                    {"fingerprint", r.fingerprint}});
                if (co_tol > 0 && r.uncertainty > co_tol * std::abs(r.actual))
                    env.diagnostics.push_back(
                        "uncertainty above requested tolerance at x=" + fd(r.x) +
                        " h=" + std::to_string(r.h) + " (increase --Q)");
            }
        } else if (*hstar) {
            if (hs_k < 1 || hs_k > 4) throw CLI::ValidationError("hstar", "k must be 1..4");
            env.subcommand = "hstar";
            std::snprintf(cfg, sizeof cfg, "hstar;v1;k=%u;pmax=%llu", hs_k,
                          (unsigned long long)hs_pmax);
            env.config_canonical = cfg;
            const auto primes = zm::arith::primes_up_to(hs_pmax);
            const auto rep = zm::singular::hstar_identity_report(hs_k, primes);
            for (const auto& r : rep.rows)
                env.rows.push_back({{"p", r.p},
                                    {"hstar", fd(r.hstar)},
                                    {"ak_local", fd(r.ak_local)},
                                    {"deviation", fd(r.deviation)}});
        } else if (*prop) {
            env.subcommand = "proposition";
            std::snprintf(cfg, sizeof cfg, "proposition;v1;kmax=%u;P=%llu", pr_kmax,
                          (unsigned long long)pr_P);
            env.config_canonical = cfg;
            const auto rows = zm::singular::proposition_trend(pr_kmax, pr_P);
            for (const auto& r : rows)
                env.rows.push_back({{"k", r.k},
                                    {"log_ak", fd(r.log_ak)},
                                    {"predicted", fd(r.predicted)},
                                    {"ratio", fd(r.ratio)}});
        } else if (*moments) {
            env.subcommand = "moments";
            std::snprintf(cfg, sizeof cfg, "moments;v1;k=%u;T0=%s;T=%s;method=%s", mo_k,
                          fd(mo_T0).c_str(), fd(mo_T).c_str(), mo_method.c_str());
            env.config_canonical = cfg;
            const auto method = mo_method == "em" ? zm::zetanum::Method::euler_maclaurin
                                : mo_method == "rs" ? zm::zetanum::Method::riemann_siegel
                                                     : zm::zetanum::Method::automatic;
            const auto m = zm::zetanum::moment_integral(mo_k, mo_T0, mo_T, method);
            if (m.T1 < mo_T)
                env.diagnostics.push_back("panel budget exceeded: achieved T1 = " +
                                          fd(m.T1) + " of requested " + fd(mo_T));
            env.rows.push_back({{"k", m.k},
                                {"T0", fd(m.T0)},
                                {"T1", fd(m.T1)},
                                {"value", fd(m.value)},
                                {"error_estimate", fd(m.error_estimate)},
                                {"points", m.points},
                                {"exploratory", m.exploratory}});
            if (m.exploratory)
                env.diagnostics.push_back(
                    "k >= 3: log^{k^2} asymptotics unreachable at desk scale");
        } else if (*dpoly) {
            env.subcommand = "dpoly";
            const double T0 = dp_T0 < 0 ? dp_T : dp_T0;
            const double T1 = dp_T0 < 0 ? 2 * dp_T : dp_T;
            std::snprintf(cfg, sizeof cfg, "dpoly;v1;k=%u;N=%llu;T0=%s;T1=%s", dp_k,
                          (unsigned long long)dp_N, fd(T0).c_str(), fd(T1).c_str());
            env.config_canonical = cfg;
            const auto table = zm::arith::sieve_dk_cached(dp_k, dp_N, cache_dir);
            double err = 0, achieved = T1;
            const double v =
                zm::zetanum::dpoly_meansq(dp_k, dp_N, T0, T1, table, &err, &achieved);
            if (achieved < T1)
                env.diagnostics.push_back("node budget exceeded: achieved T1 = " +
                                          fd(achieved) + " of requested " + fd(T1));
            const auto mv = zm::zetanum::mv_diagonal(dp_k, dp_N, T1 - T0, table);
            env.rows.push_back({{"k", dp_k},
                                {"N", dp_N},
                                {"T0", fd(T0)},
                                {"T1", fd(T1)},
                                {"value", fd(v)},
                                {"error_estimate", fd(err)},
                                {"mv_diagonal", fd(mv.main)},
                                {"mv_o_scale", fd(mv.o_scale)}});
        } else if (*probec2) {
            env.subcommand = "probe-c2";
            std::snprintf(cfg, sizeof cfg, "probe-c2;v1;T=%s;eta=%s;mzero=%d",
                          fd(c2_T).c_str(), fd(c2_eta).c_str(), int(c2_mzero));
            env.config_canonical = cfg;
            const auto N_need = static_cast<std::uint64_t>(
                std::ceil(4.0 * c2_T / (2 * 3.141592653589793) +
                          std::pow(c2_T, 1.0 + c2_eta)));
            const auto table = zm::arith::sieve_dk_cached(1, N_need, cache_dir);
            const auto r = zm::zetanum::conjecture2_probe(c2_T, c2_eta, table, c2_mzero);
            const double predicted = r.meansq_N + r.meansq_M;
            env.rows.push_back(
                {{"k", 1},
                 {"x", fd(r.T)},
                 {"h", 0},
                 {"predicted", fd(predicted)},
                 {"uncertainty", fd(std::abs(r.cross))},
                 {"actual", fd(r.moment)},
                 {"rel_err", fd(zm::report::relative_error(predicted, r.moment))},
                 {"fingerprint", zm::report::fingerprint_hex(env.config_canonical)},
                 {"N", r.N},
                 {"M", r.M},
                 {"meansq_N", fd(r.meansq_N)},
                 {"meansq_M", fd(r.meansq_M)},
                 {"cross", fd(r.cross)},
                 {"cross_fraction", fd(r.cross_fraction)},
                 {"sum_ratio", fd(r.sum_ratio)}});
        } else if (*probec4) {
            if (c4_k < 1 || c4_k > 2)
                throw CLI::ValidationError("probe-c4", "k must be 1 or 2");
            env.subcommand = "probe-c4";
            std::snprintf(cfg, sizeof cfg, "probe-c4;v1;k=%u;eta=%s;T=%s", c4_k,
                          fd(c4_eta).c_str(), fd(c4_T).c_str());
            env.config_canonical = cfg;
            const auto N = static_cast<std::uint64_t>(
                std::llround(std::pow(c4_T, 1.0 + c4_eta)));
            const auto table = zm::arith::sieve_dk_cached(c4_k, N + 1, cache_dir);
            const auto r = zm::zetanum::conjecture4_probe(c4_k, c4_eta, c4_T, table);
            env.rows.push_back({{"k", r.k},
                                {"x", fd(r.x)},
                                {"h", r.h},
                                {"predicted", fd(r.predicted)},
                                {"uncertainty", fd(r.uncertainty)},
                                {"actual", fd(r.actual)},
                                {"rel_err", fd(r.rel_err)},
                                {"fingerprint", r.fingerprint}});
            if (c4_k == 2)
                env.diagnostics.push_back("k=2 probe is exploratory; no hard tolerance");
        } else if (*series) {
            if (se_k < 1 || se_k > 6) throw CLI::ValidationError("series", "k must be 1..6");
            env.subcommand = "series";
            const std::size_t order = se_order ? se_order : se_k + 4;
            std::snprintf(cfg, sizeof cfg, "series;v1;k=%u;q=%llu;order=%zu;tol=%.17g", se_k,
                          (unsigned long long)se_q, order, se_tol);
            env.config_canonical = cfg;
            const auto G = zm::localseries::G_series(se_k, se_q, order, se_tol);
            const auto Z = zm::localseries::zeta_shifted_pow(se_k, order);
            const auto P = zm::localseries::P_poly(se_k, se_q, order, se_tol);
            for (std::size_t i = 0; i < order; ++i)
                env.rows.push_back(
                    {{"power", i},
                     {"G", zm::q_to_string(G[i])},
                     {"zeta_shifted_pow", zm::q_to_string(Z[i])},
                     {"P_poly", i < P.size() ? zm::q_to_string(P[i]) : "0"}});
        } else if (*verify) {
            env.subcommand = "verify-all";
            const auto level = vf_full ? zm::acceptance::Level::full
                                       : zm::acceptance::Level::quick;
            std::snprintf(cfg, sizeof cfg, "verify-all;v1;level=%s",
                          vf_full ? "full" : "quick");
            env.config_canonical = cfg;
            const auto results =
                zm::acceptance::run_criteria(level, cache_dir / "verify-scratch");
            for (const auto& r : results) {
                std::printf("%s %-5s [%6.1fs] %s\n", r.passed ? "PASS" : "FAIL",
                            r.id.c_str(), r.seconds, r.summary.c_str());
                env.rows.push_back({{"id", r.id},
                                    {"passed", r.passed},
                                    {"seconds", fd(r.seconds)},
                                    {"summary", r.summary}});
            }
            if (!out_path.empty()) write_output(env, out_path, format);
            return zm::acceptance::all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }

    write_output(env, out_path, format);
    return env.diagnostics.empty() ? 0 : 3;
}
