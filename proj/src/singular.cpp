#include "zetamoments/singular.hpp"

#include "zetamoments/localseries.hpp"
#include "zetamoments/quadrature.hpp"
#include "zetamoments/wide.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zm::singular {

using localseries::TaylorSeries;

namespace {

std::vector<std::int8_t> mobius_table(std::uint64_t n) {
    std::vector<std::int8_t> mu(n + 1, 1);
    std::vector<std::uint32_t> spf(n + 1, 0);
    std::vector<std::uint32_t> primes;
    mu[0] = 0;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (p > spf[i] || ip > n) break;
            spf[ip] = p;
            mu[ip] = (i % p == 0) ? std::int8_t(0) : std::int8_t(-mu[i]);
        }
    }
    return mu;
}

}  // namespace

SingularSeriesEngine::SingularSeriesEngine(EngineConfig cfg) : cfg_(cfg) {
    if (cfg_.k == 0 || cfg_.k > 4)
        throw std::invalid_argument("SingularSeriesEngine: 1 <= k <= 4 required");
    if (cfg_.q_cutoff == 0 || cfg_.q_cutoff > 2000000)
        throw std::invalid_argument("SingularSeriesEngine: 1 <= Q <= 2e6 required");
    if (!(cfg_.tol > 0)) throw std::invalid_argument("SingularSeriesEngine: tol > 0");

    const std::uint64_t ext = cfg_.q_cutoff * 8;
    mu_ = mobius_table(ext);
    dk_ext_ = arith::sieve_dk(cfg_.k, ext).values;

    // fitted constant for sum_{q<=R} d_k(q)^2 <= B R (1+log R)^{k^2-1}
    double best = 0, acc = 0;
    for (std::uint64_t q = 1; q <= ext; ++q) {
        acc += double(dk_ext_[q]) * double(dk_ext_[q]);
        if (q >= 16) {
            const double env = double(q) * std::pow(1.0 + std::log(double(q)),
                                                    double(cfg_.k * cfg_.k) - 1.0);
            best = std::max(best, acc / env);
        }
    }
    summatory_bk_ = best * 1.5;

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "singular;v1;k=%u;Q=%llu;order=%zu;tol=%.17g;c38_safety=%.17g;"
                  "rule=log-gl12;quad_rtol=%.17g",
                  cfg_.k, static_cast<unsigned long long>(cfg_.q_cutoff),
                  cfg_.effective_order(), cfg_.tol, cfg_.c38_safety, cfg_.quad_rtol);
    fingerprint_ = report::fingerprint_hex(buf);
}

const std::vector<double>& SingularSeriesEngine::ppoly(std::uint64_t q) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = ppoly_cache_.find(q);
        if (it != ppoly_cache_.end()) return it->second;
    }
    const auto A = localseries::P_poly(cfg_.k, q, cfg_.effective_order(), cfg_.tol);
    // store B_m = A_{k-1-m} / m! so P(x,q) is a plain polynomial in L
    std::vector<double> B(cfg_.k);
    double fact = 1;
    for (unsigned m = 0; m < cfg_.k; ++m) {
        if (m) fact *= m;
        B[m] = to_double(A[cfg_.k - 1 - m]) / fact;
    }
    std::lock_guard lock(cache_mutex_);
    return ppoly_cache_.emplace(q, std::move(B)).first->second;
}

double SingularSeriesEngine::P_k(double x, std::uint64_t q) const {
    if (q == 0) throw std::invalid_argument("P_k: q >= 1 required");
    if (!(x > 0)) throw std::invalid_argument("P_k: x > 0 required");
    const auto& B = ppoly(q);
    const double L = std::log(x / double(q));
    double acc = 0;
    for (std::size_t m = B.size(); m-- > 0;) acc = acc * L + B[m];
    return acc;
}

double SingularSeriesEngine::p_envelope_constant() const {
    std::lock_guard lock(c38_mutex_);
    if (c38_fitted_) return c38_;
    // fixed probe grid over q >= 2, the regime the tail lives in (q = 1
    // would dominate the fit while never appearing in any tail)
    static constexpr double xs[] = {1e3, 1e4, 1e6, 1e8};
    double worst = 0;
    const std::uint64_t qmax = std::min<std::uint64_t>(cfg_.q_cutoff, 600);
    for (std::uint64_t q = 2; q <= qmax; ++q) {
        if (mu_[q] == 0) continue;
        const double dkq = double(dk_ext_[q]);
        for (double x : xs) {
            const double denom = dkq * std::pow(std::log(double(q) * x), cfg_.k - 1.0);
            worst = std::max(worst, std::abs(P_k(x, q)) / denom);
        }
    }
    c38_ = worst * cfg_.c38_safety;
    c38_fitted_ = true;
    return c38_;
}

double SingularSeriesEngine::tail_estimate(double x, std::uint64_t d,
                                           std::uint64_t q_from) const {
    // sum_{q >= q_from} mu^2(q) q^{-2} (C d_k(qd) log^{k-1}(qd x))^2, with
    // d_k(qd) <= d_k(q) d_k(d); explicit over the sieved range, dyadic
    // blocks with the fitted summatory constant beyond it.
    const double C = p_envelope_constant();
    const double dkd = double(arith::dk_pointwise(cfg_.k, d));
    const double c2 = C * C * dkd * dkd;
    const double e2k = 2.0 * cfg_.k - 2.0;
    double tail = 0;
    const std::uint64_t ext = dk_ext_.size() - 1;
    for (std::uint64_t q = q_from; q <= ext; ++q) {
        if (mu_[q] == 0) continue;  // vanishing terms never enter the tail
        const double dq = double(dk_ext_[q]);
        const double lg = std::log(double(q) * double(d) * std::max(x, 2.0));
        tail += dq * dq * std::pow(lg, e2k) / (double(q) * double(q));
    }
    // q > ext: dyadic envelope sum_{q<=R} d_k(q)^2 <= B R (1+log R)^{k^2-1}
    double R = double(ext);
    for (int block = 0; block < 64; ++block) {
        const double R2 = 2 * R;
        const double env = summatory_bk_ * R2 *
                           std::pow(1.0 + std::log(R2), double(cfg_.k * cfg_.k) - 1.0);
        const double lg = std::log(R2 * double(d) * std::max(x, 2.0));
        const double add = env * std::pow(lg, e2k) / (R * R);
        tail += add;
        if (add < 1e-300 || add < 1e-12 * tail) break;
        R = R2;
    }
    return c2 * tail;
}

ValueWithTail SingularSeriesEngine::f_k(double x, std::uint64_t d) const {
    if (d == 0) throw std::invalid_argument("f_k: d >= 1 required");
    if (!(x > 1)) throw std::invalid_argument("f_k: x > 1 required");
    const double x2 = x * x;
    double acc = 0;
    std::uint64_t q_stop = cfg_.q_cutoff + 1;
    for (std::uint64_t q = 1; q <= cfg_.q_cutoff; ++q) {
        if (double(q) * double(d) > x2) {
            q_stop = q;  // far extrapolation goes to the tail instead
            break;
        }
        if (mu_[q] == 0) continue;
        const double P = P_k(x, q * d);
        acc += double(mu_[q]) / (double(q) * double(q)) * P * P;
    }
    ValueWithTail out;
    out.value = acc;
    out.tail = tail_estimate(x, d, q_stop);
    out.tol_met = out.tail <= cfg_.target_rel_tol * std::max(std::abs(acc), 1e-300);
    return out;
}

ValueWithTail SingularSeriesEngine::m_k_prime(double x, std::uint64_t h) const {
    if (h == 0) throw std::invalid_argument("m_k_prime: h >= 1 required");
    ValueWithTail out;
    out.tol_met = true;
    auto add = [&](std::uint64_t d) {
        const ValueWithTail f = f_k(x, d);
        out.value += f.value / double(d);
        out.tail += f.tail / double(d);
        out.tol_met = out.tol_met && f.tol_met;
    };
    for (std::uint64_t dd = 1; dd * dd <= h; ++dd) {
        if (h % dd) continue;
        add(dd);
        if (dd != h / dd) add(h / dd);
    }
    return out;
}

IncrementResult SingularSeriesEngine::m_k_increment(double x1, double x2,
                                                    std::uint64_t h) const {
    if (!(1 < x1 && x1 < x2))
        throw std::invalid_argument("m_k_increment: 1 < x1 < x2 required");
    const double u1 = std::log(x1), u2 = std::log(x2);
    const auto f = [&](double u) {
        const double y = std::exp(u);
        return m_k_prime(y, h).value * y;
    };
    const std::size_t panels = std::max<std::size_t>(8, std::size_t(4.0 * (u2 - u1)) + 1);
    const auto q =
        quadrature::integrate_adaptive(f, u1, u2, panels, cfg_.quad_rtol, 6, 1);
    IncrementResult out;
    out.value = q.value;
    out.quad_error = q.error_estimate;
    out.converged = q.converged;
    // tails vary slowly; bound the integral by the worst sampled rate
    double rate = 0;
    for (double y : {x1, std::sqrt(x1 * x2), x2})
        rate = std::max(rate, m_k_prime(y, h).tail);
    out.tail = rate * (x2 - x1) + q.error_estimate;
    return out;
}

// ---------------------------------------------------------------------------
// a_k
// ---------------------------------------------------------------------------

namespace {

// exact binomial as qreal via GMP decimal string
qreal binom_q(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return q_parse(b.get_str().c_str());
}

// log of a unit power series (a[0] = 1), truncated
std::vector<qreal> log_series(const std::vector<qreal>& a) {
    const std::size_t M = a.size();
    std::vector<qreal> l(M, qreal(0));
    for (std::size_t m = 1; m < M; ++m) {
        qreal acc = a[m];
        for (std::size_t i = 1; i < m; ++i)
            acc -= qreal(static_cast<long>(i)) / qreal(static_cast<long>(m)) * l[i] *
                   a[m - i];
        l[m] = acc;
    }
    return l;
}

struct LocalFactorSpec {
    unsigned exponent;            // power of (1-u)
    std::vector<qreal> poly;      // the accompanying u-polynomial / series
};

// local factor f(u) = (1-u)^exponent * sum_r poly[r] u^r with u = 1/p
LocalFactorSpec local_spec(unsigned k, AkForm form, std::size_t M) {
    LocalFactorSpec s;
    if (form == AkForm::eq51) {
        s.exponent = (k - 1) * (k - 1);
        s.poly.assign(std::max<std::size_t>(k, M), qreal(0));
        for (unsigned r = 0; r < k; ++r) {
            const qreal c = binom_q(k - 1, r);
            s.poly[r] = c * c;
        }
    } else {
        s.exponent = k * k;
        s.poly.assign(M, qreal(0));
        qreal d = 1;  // d_k(p^r) via the ratio recurrence
        for (std::size_t r = 0; r < M; ++r) {
            s.poly[r] = d * d;
            d *= qreal(static_cast<long>(k + r)) / qreal(static_cast<long>(r + 1));
        }
    }
    return s;
}

qreal eval_local_log(const LocalFactorSpec& s, qreal u, unsigned k, AkForm form,
                     double tol) {
    // log[(1-u)^e * S(u)] evaluated directly (used for p <= cutoff)
    qreal S = 0;
    if (form == AkForm::eq51) {
        for (std::size_t r = k; r-- > 0;) S = S * u + s.poly[r];
    } else {
        // infinite sum: d_k(p^r)^2 u^r with explicit tail control
        qreal d = 1, upow = 1;
        for (unsigned long r = 0;; ++r) {
            const qreal term = d * d * upow;
            S += term;
            const qreal dn = d * qreal(static_cast<long>(k + r)) /
                             qreal(static_cast<long>(r + 1));
            const qreal next = dn * dn * upow * u;
            if (to_double(next / (1 - u)) < tol * to_double(S) && r >= k) break;
            if (r > 100000) throw std::runtime_error("a_k_eval: r-sum stalled");
            d = dn;
            upow *= u;
        }
    }
    return qreal(s.exponent) * qlog(1 - u) + qlog(S);
}

}  // namespace

AkResult a_k_eval(unsigned k, std::uint64_t prime_cutoff, AkForm form) {
    if (k == 0) throw std::invalid_argument("a_k_eval: k >= 1 required");
    if (prime_cutoff < 100) throw std::invalid_argument("a_k_eval: prime cutoff >= 100");

    constexpr std::size_t M = 32;  // 1/p expansion order for the tail
    const LocalFactorSpec spec = local_spec(k, form, M);

    const auto primes = arith::primes_up_to(prime_cutoff);
    qreal log_prod = 0;
    for (std::uint64_t p : primes) {
        const qreal u = qreal(1) / qreal(static_cast<long long>(p));
        log_prod += eval_local_log(spec, u, k, form, 1e-34);
    }

    // tail: log f(u) = e log(1-u) + log S(u) = sum_{m>=2} c_m u^m (c_1
    // cancels by construction); pair with prime zeta tails sum_{p>P} p^{-m}
    std::vector<qreal> head(spec.poly.begin(), spec.poly.begin() + M);
    const std::vector<qreal> logS = log_series(head);
    std::vector<qreal> c(M, qreal(0));
    for (std::size_t m = 1; m < M; ++m)
        c[m] = logS[m] - qreal(spec.exponent) / qreal(static_cast<long>(m));

    std::vector<qreal> pztail(M, qreal(0));
    for (std::size_t m = 2; m < M; ++m) {
        qreal v = localseries::prime_zeta_q(qreal(static_cast<long>(m)));
        for (std::uint64_t p : primes) {
            const qreal t = qpow_u(qreal(1) / qreal(static_cast<long long>(p)),
                                   static_cast<unsigned long>(m));
            v -= t;
            if (to_double(t * qreal(static_cast<long long>(p))) < 1e-40) break;
        }
        pztail[m] = v;
    }

    std::vector<qreal> terms;
    for (std::size_t m = 2; m < M; ++m) terms.push_back(c[m] * pztail[m]);
    const qreal last = terms[terms.size() - 1];
    const qreal prev = terms[terms.size() - 2];
    const double rho = (prev == 0) ? 0.0 : to_double(qabs(last / prev));

    AkResult out;
    if (rho < 0.9) {
        qreal tail_log = 0;
        for (const qreal t : terms) tail_log += t;
        out.log_value = to_double(log_prod + tail_log);
        out.tail_bound =
            (rho > 0) ? to_double(qabs(last)) * rho / (1.0 - rho) : to_double(qabs(last));
    } else {
        // expansion not yet geometric at this cutoff: keep the raw product
        // and fall back on the coarse sandwich |log f_p| <= 2 (k-1)^4 / p^2
        out.log_value = to_double(log_prod);
        const double km1_4 = std::pow(double(k) - 1.0, 4.0);
        out.tail_bound =
            3.0 * km1_4 / (double(prime_cutoff) * std::log(double(prime_cutoff)));
    }
    out.value = std::exp(out.log_value);
    return out;
}

double a_k_local_factor(unsigned k, std::uint64_t p, double tol) {
    const LocalFactorSpec spec = local_spec(k, AkForm::eq10, 4);
    const qreal u = qreal(1) / qreal(static_cast<long long>(p));
    return to_double(qexp(eval_local_log(spec, u, k, AkForm::eq10, tol)));
}

HstarReport hstar_identity_report(unsigned k, std::span<const std::uint64_t> primes,
                                  double tol) {
    if (k == 0 || k > 4)
        throw std::invalid_argument("hstar_identity_report: 1 <= k <= 4 required");
    HstarReport rep{k, {}, 0};
    for (std::uint64_t p : primes) {
        HstarRow row;
        row.p = p;
        row.hstar = localseries::hstar_local_factor(k, p, tol);
        row.ak_local = a_k_local_factor(k, p, 1e-30);
        row.deviation = std::abs(row.hstar - row.ak_local);
        rep.max_deviation = std::max(rep.max_deviation, row.deviation);
        rep.rows.push_back(row);
    }
    return rep;
}

FBoundReport f_bound_check(const SingularSeriesEngine& engine,
                           std::span<const double> x_grid,
                           std::span<const std::uint64_t> d_grid) {
    const unsigned k = engine.config().k;
    FBoundReport rep;
    rep.k = k;
    std::size_t idx = 0;
    for (double x : x_grid) {
        for (std::uint64_t d : d_grid) {
            if (double(d) > x) continue;  // the bound is stated for d <= x
            FBoundRow row;
            row.x = x;
            row.d = d;
            row.f_value = engine.f_k(x, d).value;
            const double dd =
                (k >= 2) ? double(arith::dk_pointwise(k - 1, d)) : (d == 1 ? 1.0 : 0.0);
            row.envelope = dd * dd * std::pow(std::log(x), 2.0 * k - 2.0);
            row.ratio = (row.envelope > 0) ? row.f_value / row.envelope
                                           : (std::abs(row.f_value) < 1e-12 ? 0.0 : 1e300);
            rep.fitted_c = std::max(rep.fitted_c, row.ratio);
            if (idx % 2 == 0) rep.fitted_c_coarse = std::max(rep.fitted_c_coarse, row.ratio);
            rep.rows.push_back(row);
            ++idx;
        }
    }
    return rep;
}

std::vector<PropositionRow> proposition_trend(unsigned k_max, std::uint64_t prime_cutoff) {
    if (k_max < 2 || k_max > 60)
        throw std::invalid_argument("proposition_trend: 2 <= k_max <= 60 required");
    if (prime_cutoff < 2ull * k_max * k_max)
        throw std::invalid_argument(
            "proposition_trend: prime cutoff below 2 k_max^2 (product split point)");
    const double eg = to_double(localseries::euler_gamma());
    std::vector<PropositionRow> rows;
    for (unsigned k = 2; k <= k_max; ++k) {
        const AkResult a = a_k_eval(k, prime_cutoff, AkForm::eq51);
        PropositionRow r;
        r.k = k;
        r.log_ak = a.log_value;
        r.predicted = -double(k) * double(k) * std::log(2.0 * std::exp(eg) * std::log(double(k)));
        r.ratio = r.log_ak / r.predicted;
        rows.push_back(r);
    }
    return rows;
}

std::vector<report::PredictionReport> correlation_report(
    const SingularSeriesEngine& engine, const arith::DivisorTable& table,
    std::span<const double> x_list, std::span<const std::uint64_t> h_list) {
    const unsigned k = engine.config().k;
    if (table.k != k)
        throw std::invalid_argument("correlation_report: table k mismatch");
    std::vector<report::PredictionReport> out;
    for (double x : x_list) {
        const double x0 = std::max(1000.0, x / 2.0);
        if (!(x0 < x))
            throw std::invalid_argument("correlation_report: x must exceed 1000");
        const auto xi = static_cast<std::uint64_t>(x);
        const auto x0i = static_cast<std::uint64_t>(x0);
        for (std::uint64_t h : h_list) {
            if (double(h) * double(h) > x)
                throw std::invalid_argument("correlation_report: h above x^(1/2)");
            const IncrementResult inc = engine.m_k_increment(x0, x, h);
            const std::uint64_t a1 = arith::brute_force_Dk(k, xi, h, table);
            const std::uint64_t a0 = arith::brute_force_Dk(k, x0i, h, table);
            report::PredictionReport r;
            r.k = k;
            r.x = x;
            r.h = h;
            r.predicted = inc.value;
            r.uncertainty = inc.tail;
            r.actual = double(a1 - a0);
            r.rel_err = report::relative_error(r.predicted, r.actual);
            r.fingerprint = engine.fingerprint();
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace zm::singular
