#include "zetamoments/acceptance.hpp"

#include "zetamoments/arith.hpp"
#include "zetamoments/exactpoly.hpp"
#include "zetamoments/localseries.hpp"
#include "zetamoments/report.hpp"
#include "zetamoments/singular.hpp"
#include "zetamoments/zetanum.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <complex>
#include <cstdio>
#include <optional>

namespace zm::acceptance {

namespace {

using exactpoly::Rational;
using exactpoly::RationalPolynomial;

struct Battery {
    Level level;
    std::filesystem::path scratch;
    std::vector<CriterionResult> results;

    // lazily shared sieves
    std::optional<arith::DivisorTable> t2_1m, t3_1m;

    const arith::DivisorTable& table2() {
        if (!t2_1m) t2_1m = arith::sieve_dk_cached(2, 1000008, scratch);
        return *t2_1m;
    }
    const arith::DivisorTable& table3() {
        if (!t3_1m) t3_1m = arith::sieve_dk_cached(3, 1000001, scratch);
        return *t3_1m;
    }

    template <typename F>
    void criterion(const std::string& id, double budget_seconds, F&& body) {
        CriterionResult r;
        r.id = id;
        const auto start = std::chrono::steady_clock::now();
        try {
            auto [ok, summary] = body();
            r.passed = ok;
            r.summary = summary;
        } catch (const std::exception& e) {
            r.passed = false;
            r.summary = std::string("exception: ") + e.what();
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0) {
            char b[64];
            std::snprintf(b, sizeof b, "; %.2f s of %.0f s budget", r.seconds,
                          budget_seconds);
            r.summary += b;
            if (r.seconds >= budget_seconds) r.passed = false;
        }
        results.push_back(std::move(r));
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

RationalPolynomial poly_from_ints(std::initializer_list<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return RationalPolynomial(std::move(c));
}

void run_quick(Battery& b) {
    b.criterion("C01", 1.0, [] {
        const bool w2 = exactpoly::w_poly(2) == poly_from_ints({1, 4, -6, 4, -1});
        // w_3 as printed except the eta^7..eta^9 signs, which are misprinted
        // (the printed list violates w_3(eta) + w_3(1-eta) = 42); w_4 verbatim
        const bool w3 = exactpoly::w_poly(3) ==
                        poly_from_ints({1, 9, 36, 84, 126, -630, 588, -180, 9, -2});
        const bool w4 = exactpoly::w_poly(4) ==
                        poly_from_ints({1, 16, 120, 560, 1820, 4368, 8008, 11440, 12870,
                                        11440, -152152, 179088, -78260, 14000, -1320, 16, -3});
        return std::pair(w2 && w3 && w4,
                         fmt("printed polynomials: w2 %s, w3 %s (3 printed signs corrected), w4 %s",
                             w2 ? "exact" : "MISMATCH", w3 ? "exact" : "MISMATCH",
                             w4 ? "exact" : "MISMATCH"));
    });

    b.criterion("C02", 1.0, [] {
        const auto w3 = exactpoly::w_poly(3);
        const bool i42 = (w3 + w3.compose_linear(Rational(1), Rational(-1))) ==
                         RationalPolynomial::constant(Rational(42));
        const RationalPolynomial om({Rational(1), Rational(-1)});
        const bool i2 =
            (exactpoly::w_poly(2) + om * om * om * om) ==
            RationalPolynomial::constant(Rational(2));
        const bool i1 = exactpoly::w_poly(1) == RationalPolynomial::constant(Rational(1));
        const auto w41 = exactpoly::w_poly(4)(Rational(1));
        const bool i4 = (w41 == 12012) && (Rational(2) * w41 == 24024);
        return std::pair(i42 && i2 && i1 && i4,
                         fmt("w3+w3(1-.)=42 %s; w2+(1-.)^4=2 %s; w1==1 %s; w4(1)=12012 %s",
                             i42 ? "exact" : "FAIL", i2 ? "exact" : "FAIL",
                             i1 ? "exact" : "FAIL", i4 ? "exact" : "FAIL"));
    });

    b.criterion("C03", 10.0, [] {
        bool ok = true;
        for (unsigned k = 1; k <= 6; ++k) ok = ok && (exactpoly::gamma_kn(k, 0) == k);
        for (unsigned k = 1; k <= 4 && ok; ++k)
            for (unsigned n = 0; n < k * k && ok; ++n)
                ok = exactpoly::gamma_kn(k, n) == exactpoly::gamma_kn_oracle(k, n);
        return std::pair(ok, std::string("gamma_k(0)=k (k<=6) and closed form == contour "
                                         "oracle (k<=4, all n)"));
    });

    b.criterion("C04", 0, [] {
        const bool ok = exactpoly::ks_gk(1) == 1 && exactpoly::ks_gk(2) == 2 &&
                        exactpoly::ks_gk(3) == 42 && exactpoly::ks_gk(4) == 24024;
        return std::pair(ok, std::string("ks_gk(1..4) = 1, 2, 42, 24024 exactly"));
    });

    b.criterion("C07", 0, [] {
        const double tol = 1e-28;
        bool ok = true;
        double worst_p1 = 0;
        for (double x : {1e3, 1e6}) {
            worst_p1 = std::max(worst_p1,
                                std::abs(localseries::P_k_eval(1, x, 1, 6, tol) - 1.0));
            for (std::uint64_t p : {2ull, 13ull})
                worst_p1 = std::max(worst_p1, std::abs(localseries::P_k_eval(1, x, p, 6, tol)));
        }
        ok = ok && worst_p1 < 1e-20;
        const double tg = 2 * to_double(localseries::euler_gamma());
        double worst_p2 = 0;
        for (double x : {1e3, 1e6})
            worst_p2 = std::max(worst_p2, std::abs(localseries::P_k_eval(2, x, 1, 6, tol) -
                                                   (std::log(x) + tg)));
        ok = ok && worst_p2 < 1e-10;
        singular::SingularSeriesEngine e({.k = 2});
        const double c_full = e.p_envelope_constant();
        ok = ok && c_full > 0 && c_full < 100;
        return std::pair(ok, fmt("P_1 residues exact to %.1e; |P_2(x,1)-(log x+2g)| = %.1e "
                                 "(< 1e-10); P_k envelope constant %.3f finite",
                                 worst_p1, worst_p2, c_full));
    });

    b.criterion("C08", 0, [] {
        singular::SingularSeriesEngine e({.k = 1});
        bool ok = true;
        double worst = 0;
        for (double x : {1e4, 1e6}) {
            worst = std::max(worst, std::abs(e.f_k(x, 1).value - 1.0));
            worst = std::max(worst, std::abs(e.f_k(x, 3).value));
            worst = std::max(worst, std::abs(e.m_k_prime(x, 12).value - 1.0));
        }
        ok = worst < 1e-10;
        // correlation against floor(x): anchored increment over [x/2, x]
        const auto t1 = arith::sieve_dk(1, 20016);
        const double xs[] = {2e4};
        const std::uint64_t hs[] = {5};
        const auto rows = singular::correlation_report(e, t1, xs, hs);
        ok = ok && rows[0].rel_err < 1e-3;
        return std::pair(ok, fmt("k=1 chain degenerates exactly (worst %.1e); correlation "
                                 "rel_err %.1e < 1e-3",
                                 worst, rows[0].rel_err));
    });

    b.criterion("C14c", 0, [&b] {
        // determinism: identical configs produce byte-identical rows
        singular::SingularSeriesEngine e1({.k = 2}), e2({.k = 2});
        const auto t2 = arith::sieve_dk(2, 50010);
        const double xs[] = {5e4};
        const std::uint64_t hs[] = {1, 6};
        const auto r1 = singular::correlation_report(e1, t2, xs, hs);
        const auto r2 = singular::correlation_report(e2, t2, xs, hs);
        bool ok = r1.size() == r2.size();
        for (std::size_t i = 0; ok && i < r1.size(); ++i)
            ok = report::to_csv_row(r1[i]) == report::to_csv_row(r2[i]);
        (void)b;
        return std::pair(ok, std::string("two engines, same config: byte-identical report rows"));
    });

    b.criterion("C14b", 0, [&b] {
        // cold vs warm cache
        const auto dir = b.scratch / "cache_roundtrip";
        std::filesystem::remove_all(dir);
        const auto cold = arith::sieve_dk_cached(3, 40000, dir);
        const auto warm = arith::sieve_dk_cached(3, 40000, dir);
        const auto fresh = arith::sieve_dk(3, 40000);
        const bool ok = cold.values == warm.values && cold.values == fresh.values;
        std::filesystem::remove_all(dir);
        return std::pair(ok, std::string("cold cache == warm cache == fresh sieve"));
    });
}

void run_full(Battery& b) {
    b.criterion("C05", 30.0, [] {
        const auto a1a = singular::a_k_eval(1, 1000, singular::AkForm::eq10);
        const auto a1b = singular::a_k_eval(1, 1000, singular::AkForm::eq51);
        bool ok = std::abs(a1a.value - 1.0) < 1e-18 && std::abs(a1b.value - 1.0) < 1e-18;
        const auto a2 = singular::a_k_eval(2, 1000000, singular::AkForm::eq51);
        const double six_pi2 = 6.0 / (M_PI * M_PI);
        const double d2 = std::abs(a2.value - six_pi2);
        ok = ok && d2 < 1e-10;
        double worst = 0;
        for (unsigned k = 2; k <= 5; ++k) {
            const auto e10 = singular::a_k_eval(k, 10000, singular::AkForm::eq10);
            const auto e51 = singular::a_k_eval(k, 10000, singular::AkForm::eq51);
            const double gap = std::abs(e10.value - e51.value) -
                               (e10.tail_bound + e51.tail_bound);
            worst = std::max(worst, gap);
        }
        ok = ok && worst <= 1e-13;
        return std::pair(ok, fmt("a_1 = 1 (to 1e-18); |a_2 - 6/pi^2| = %.1e at P=1e6; "
                                 "eq10/eq51 agree within tails for k=2..5",
                                 d2));
    });

    b.criterion("C06", 60.0, [] {
        const auto primes = arith::primes_up_to(100);
        double worst3 = 0, worst4 = 0;
        for (unsigned k = 1; k <= 3; ++k) {
            const auto rep = singular::hstar_identity_report(k, primes, 1e-14);
            worst3 = std::max(worst3, rep.max_deviation);
        }
        const auto rep4 = singular::hstar_identity_report(4, primes, 1e-14);
        worst4 = rep4.max_deviation;
        const bool ok = worst3 < 1e-10 && worst4 < 1e-9;
        return std::pair(ok, fmt("H* local identity: max dev %.2e (k<=3, p<=100; < 1e-10), "
                                 "%.2e (k=4; < 1e-9)",
                                 worst3, worst4));
    });

    b.criterion("C09", 120.0, [&b] {
        singular::SingularSeriesEngine e({.k = 2});
        const double xs[] = {1e6};
        const std::uint64_t hs[] = {1, 2, 3, 4, 5, 6, 7, 8};
        const auto rows = singular::correlation_report(e, b.table2(), xs, hs);
        double worst = 0;
        for (const auto& r : rows) worst = std::max(worst, r.rel_err);
        return std::pair(worst <= 0.02,
                         fmt("k=2 increments over (5e5,1e6), h=1..8: worst rel_err %.2e "
                             "(<= 2%%)",
                             worst));
    });

    b.criterion("C10", 300.0, [&b] {
        singular::SingularSeriesEngine e({.k = 3});
        const double xs[] = {1e5, 1e6};
        const std::uint64_t hs[] = {1};
        const auto rows = singular::correlation_report(e, b.table3(), xs, hs);
        const double r5 = rows[0].rel_err, r6 = rows[1].rel_err;
        const bool ok = r6 < r5 && r6 < 0.10;
        return std::pair(ok, fmt("k=3 rel_err: %.2e at x=1e5 -> %.2e at x=1e6 "
                                 "(decreasing, < 10%%)",
                                 r5, r6));
    });

    b.criterion("C11", 60.0, [] {
        const auto rows = singular::proposition_trend(40, 100000);
        double r10 = 0, r40 = 0;
        for (const auto& r : rows) {
            if (r.k == 10) r10 = r.ratio;
            if (r.k == 40) r40 = r.ratio;
        }
        const bool ok = std::abs(r40 - 1.0) < std::abs(r10 - 1.0);
        return std::pair(ok, fmt("log a_k trend: ratio %.4f at k=10 -> %.4f at k=40 "
                                 "(strictly closer to 1)",
                                 r10, r40));
    });

    b.criterion("C12a", 450.0, [] {
        const auto g1 =
            zetanum::gk_estimate(1, 1e4, zetanum::GkNormalization::refined_second_moment);
        const bool ok = g1.value >= 0.9 && g1.value <= 1.1;
        return std::pair(ok, fmt("g_1(1e4) = %.4f against the refined second-moment "
                                 "oracle (in [0.9, 1.1])",
                                 g1.value));
    });

    b.criterion("C12b", 450.0, [] {
        const double g2a = zetanum::gk_estimate(2, 1e3).value;
        const double g2b = zetanum::gk_estimate(2, 1e4).value;
        // bands frozen from the calibration run (2.20, 2.24) with 2x slack
        const bool ok = g2a > 1.75 && g2a < 2.75 && g2b > 1.75 && g2b < 2.75;
        return std::pair(ok, fmt("g_2 = %.4f (T=1e3), %.4f (T=1e4): inside the frozen "
                                 "band [1.75, 2.75] around 2",
                                 g2a, g2b));
    });

    b.criterion("C12c", 0, [] {
        const double g2a = zetanum::gk_estimate(2, 1e3).value;
        const double g2b = zetanum::gk_estimate(2, 1e4).value;
        const bool ok = std::abs(g2b - 2.0) < std::abs(g2a - 2.0);
        return std::pair(ok, fmt("|g_2 - 2| decreasing over {1e3, 1e4}: %.4f -> %.4f "
                                 "(KNOWN RED: second-order main terms dominate at desk "
                                 "height; see notes)",
                                 std::abs(g2a - 2.0), std::abs(g2b - 2.0)));
    });

    b.criterion("C12d", 0, [] {
        double worst = 0;
        for (double t = 5; t <= 100; t += 4.7)
            for (double th = 0.3; th < 6.3; th += 1.1) {
                const std::complex<double> s{0.5 + 0.125 * std::cos(th),
                                             t + 0.125 * std::sin(th)};
                worst = std::max(worst, std::abs(zetanum::zeta_em(s) -
                                                 zetanum::chi_factor(s) *
                                                     zetanum::zeta_em(1.0 - s)));
            }
        return std::pair(worst < 1e-8,
                         fmt("functional-equation residual %.2e (< 1e-8)", worst));
    });

    b.criterion("C13", 300.0, [] {
        const auto t1 = arith::sieve_dk(1, 1300);
        const auto r = zetanum::conjecture2_probe(2000.0, 0.0, t1);
        const bool ok = std::abs(r.sum_ratio - 1.0) <= 0.10 && r.cross_fraction < 0.1;
        return std::pair(ok, fmt("two-polynomial sum / moment = %.4f (within 10%%); "
                                 "cross-term fraction %.4f (< 0.1)",
                                 r.sum_ratio, r.cross_fraction));
    });
}

}  // namespace

std::vector<CriterionResult> run_criteria(Level level,
                                          const std::filesystem::path& scratch_dir) {
    Battery b;
    b.level = level;
    b.scratch = scratch_dir;
    std::filesystem::create_directories(scratch_dir);
    run_quick(b);
    if (level == Level::full) {
        run_full(b);
        // C14a: quick battery runtime budget (< 1 min), measured here
        double quick_seconds = 0;
        for (const auto& r : b.results)
            if (r.id.starts_with("C0") || r.id.starts_with("C14")) quick_seconds += r.seconds;
        CriterionResult r;
        r.id = "C14a";
        r.passed = quick_seconds < 60.0;
        r.summary = fmt("quick identity battery completed in %.1f s (< 60 s)", quick_seconds);
        b.results.push_back(r);
    }
    return std::move(b.results);
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace zm::acceptance
