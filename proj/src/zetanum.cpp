#include "zetamoments/zetanum.hpp"

#include "zetamoments/exactpoly.hpp"
#include "zetamoments/localseries.hpp"
#include "zetamoments/quadrature.hpp"
#include "zetamoments/singular.hpp"

#include "rs_tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zm::zetanum {

using std::complex;
namespace qd = zm::quadrature;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606065121;

// B_{2j} as doubles, from the exact table
const std::vector<double>& bernoulli2j() {
    static const std::vector<double> b = [] {
        const auto& exact = localseries::bernoulli_numbers();
        std::vector<double> out(exact.size() / 2 + 1);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = to_double(exact[2 * j]);
        return out;
    }();
    return b;
}

}  // namespace

std::complex<double> zeta_em(std::complex<double> s) {
    if (std::abs(s - complex<double>(1.0)) < 1e-12)
        throw std::domain_error("zeta_em: pole at s = 1");
    const auto& B = bernoulli2j();
    const int N = std::max(16, int(0.53 * (std::abs(s.imag()) + 10.0)) + 8);
    const int J = 14;
    complex<double> sum = 0;
    for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(double(n)));
    const double lnN = std::log(double(N));
    sum += std::exp((1.0 - s) * lnN) / (s - 1.0);
    sum += 0.5 * std::exp(-s * lnN);
    complex<double> rising = s;
    double fact = 2;
    complex<double> npow = std::exp(-(s + 1.0) * lnN);
    const double invN2 = 1.0 / (double(N) * double(N));
    for (int j = 1; j <= J; ++j) {
        sum += B[j] / fact * rising * npow;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        fact *= (2 * j + 1) * (2 * j + 2);
        npow *= invN2;
    }
    return sum;
}

double rs_theta(double t) {
    if (t <= 0) throw std::domain_error("rs_theta: t > 0 required");
    const double u = t / 2.0;
    const double t2 = t * t;
    return u * std::log(t / kTwoPi) - u - std::numbers::pi / 8.0 +
           (1.0 / 48.0) / t + (7.0 / 5760.0) / (t * t2) +
           (31.0 / 80640.0) / (t * t2 * t2) + (127.0 / 430080.0) / (t * t2 * t2 * t2);
}

namespace {

double cheb_eval32(const std::array<double, 32>& c, double x) {
    double b1 = 0, b2 = 0;
    for (int i = 31; i >= 1; --i) {
        const double t = 2.0 * x * b1 - b2 + c[i];
        b2 = b1;
        b1 = t;
    }
    return x * b1 - b2 + c[0];
}

}  // namespace

double rs_Z(double t, unsigned terms) {
    if (t < kTwoPi) throw std::domain_error("rs_Z: t >= 2 pi required");
    if (terms < 1 || terms > 7) throw std::invalid_argument("rs_Z: 1..7 terms tabulated");
    const double a = std::sqrt(t / kTwoPi);
    const auto N = static_cast<std::uint64_t>(a);
    const double p = a - double(N);
    const double theta = rs_theta(t);
    double main = 0;
    for (std::uint64_t n = 1; n <= N; ++n)
        main += std::cos(theta - t * std::log(double(n))) / std::sqrt(double(n));
    main *= 2.0;

    const double x = 2.0 * p - 1.0;
    double corr = 0;
    for (int j = int(terms) - 1; j >= 0; --j)
        corr = corr / a + cheb_eval32(detail::kRSCorrection[j], x);
    const double sign = (N % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
    return main + sign * corr / std::sqrt(a);
}

std::complex<double> zeta_crit(double t, Method method) {
    if (t < 0) throw std::domain_error("zeta_crit: t >= 0 required");
    const bool use_rs = (method == Method::riemann_siegel) ||
                        (method == Method::automatic && t >= kMethodSwitchT);
    if (!use_rs) return zeta_em(complex<double>(0.5, t));
    const double theta = rs_theta(t);
    return rs_Z(t) * std::exp(complex<double>(0.0, -theta));
}

std::complex<double> CriticalLineEvaluator::operator()(double t) const {
    const bool use_rs = (method == Method::riemann_siegel) ||
                        (method == Method::automatic && t >= switch_t);
    if (use_rs) {
        // asymptotic remainder scale of the truncated correction series;
        // the constant sits ~40x above the measured full-table agreement
        const double err_scale = 1e-3 * std::pow(t / kTwoPi, -(2.0 * rs_terms + 3.0) / 4.0);
        if (err_scale > precision_target)
            throw std::runtime_error(
                "CriticalLineEvaluator: precision target unachievable at this height "
                "with the configured correction terms");
        const double theta = rs_theta(t);
        return rs_Z(t, rs_terms) * std::exp(complex<double>(0.0, -theta));
    }
    return zeta_em(complex<double>(0.5, t));
}

std::complex<double> log_gamma(std::complex<double> z) {
    complex<double> acc = 0;
    while (z.real() < 12.0) {
        if (std::abs(z) < 1e-8)
            throw std::domain_error("log_gamma: argument too close to a pole");
        acc -= std::log(z);
        z += 1.0;
    }
    const auto& B = bernoulli2j();
    complex<double> st = (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi);
    const complex<double> z2 = z * z;
    complex<double> zp = z;
    for (int n = 1; n <= 8; ++n) {
        st += B[n] / double((2 * n) * (2 * n - 1)) / zp;
        zp *= z2;
    }
    return acc + st;
}

std::complex<double> chi_factor(std::complex<double> s) {
    const complex<double> lg = log_gamma((1.0 - s) / 2.0) - log_gamma(s / 2.0);
    return std::exp((s - 0.5) * std::log(std::numbers::pi) + lg);
}

MomentEstimate moment_integral(unsigned k, double T0, double T1, Method method,
                               std::size_t max_panels) {
    if (k == 0 || k > 4) throw std::invalid_argument("moment_integral: 1 <= k <= 4");
    if (T0 < 0 || T1 < T0) throw std::invalid_argument("moment_integral: bad range");
    MomentEstimate est;
    est.k = k;
    est.T0 = T0;
    est.T1 = T1;
    est.exploratory = k >= 3;
    if (T1 == T0) return est;

    auto n1 = static_cast<std::size_t>(std::ceil((T1 - T0) / 0.25));
    if (n1 > max_panels) {  // partial result over the achievable range
        n1 = max_panels;
        T1 = T0 + 0.25 * double(n1);
        est.T1 = T1;
    }
    const auto f = [k, method](double t) {
        return std::pow(std::norm(zeta_crit(t, method)), double(k));
    };
    const double coarse = qd::integrate_panels(f, T0, T1, std::max<std::size_t>(1, n1 / 2));
    const double fine = qd::integrate_panels(f, T0, T1, n1);
    est.value = fine;
    est.error_estimate = std::abs(fine - coarse);
    est.points = 12 * (n1 + std::max<std::size_t>(1, n1 / 2));
    return est;
}

double second_moment_main_term(double T) {
    return T * std::log(T / kTwoPi) + (2.0 * kEulerGamma - 1.0) * T;
}

GkEstimate gk_estimate(unsigned k, double T, GkNormalization norm) {
    if (T <= 10.0) throw std::invalid_argument("gk_estimate: T > 10 required");
    GkEstimate out;
    out.moment = moment_integral(k, 0.0, T);
    out.a_k = singular::a_k_eval(k, 100000, singular::AkForm::eq51).value;
    if (norm == GkNormalization::refined_second_moment) {
        if (k != 1)
            throw std::invalid_argument("gk_estimate: refined oracle is k = 1 only");
        out.value = out.moment.value / second_moment_main_term(T);
        return out;
    }
    const double kk = double(k) * k;
    const double denom =
        out.a_k / std::tgamma(kk + 1.0) * T * std::pow(std::log(T), kk);
    out.value = out.moment.value / denom;
    return out;
}

// ---------------------------------------------------------------------------
// Dirichlet polynomials with per-n phase recurrence
// ---------------------------------------------------------------------------

namespace {

struct PolySpec {
    std::vector<double> r;      // a_n / sqrt(n), index 0 == n = 1
    std::vector<double> ln;     // log n
};

PolySpec make_spec(unsigned k, std::uint64_t N, const arith::DivisorTable& table) {
    if (table.k != k) throw std::invalid_argument("dpoly: table built for different k");
    if (N > table.x_max) throw std::invalid_argument("dpoly: table does not cover N");
    PolySpec s;
    s.r.resize(N);
    s.ln.resize(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        s.r[n - 1] = double(table.values[n]) / std::sqrt(double(n));
        s.ln[n - 1] = std::log(double(n));
    }
    return s;
}

// integrate f(t, D(t)) over [T0, T1] with composite GL-12 panels of the
// given width. Panels are grouped in chunks of 256; each chunk rebases the
// per-n phases exactly, so threading cannot change any partial sum.
template <typename F>
double integrate_dirichlet(const PolySpec& spec, double T0, double T1, double width,
                           F&& f) {
    const auto n_panels = static_cast<std::size_t>(std::ceil((T1 - T0) / width));
    if (n_panels == 0) return 0;
    const double w = (T1 - T0) / double(n_panels);
    const std::size_t N = spec.r.size();

    // fixed node offsets inside a panel
    std::array<double, 12> xi;
    for (int j = 0; j < 12; ++j) xi[j] = 0.5 * w * (qd::kGL12[j].x + 1.0);
    // off[j][n] = exp(-i xi_j ln n); step[n] = exp(-i w ln n)
    std::vector<std::array<complex<double>, 12>> off(N);
    std::vector<complex<double>> step(N);
    for (std::size_t n = 0; n < N; ++n) {
        for (int j = 0; j < 12; ++j) off[n][j] = std::polar(1.0, -xi[j] * spec.ln[n]);
        step[n] = std::polar(1.0, -w * spec.ln[n]);
    }

    constexpr std::size_t kChunk = 256;
    const std::size_t n_chunks = (n_panels + kChunk - 1) / kChunk;
    std::vector<double> panel_sum(n_panels, 0.0);

    auto run_chunk = [&](std::size_t c, std::vector<complex<double>>& z) {
        const std::size_t lo = c * kChunk, hi = std::min(n_panels, lo + kChunk);
        const double t_base = T0 + w * double(lo);
        for (std::size_t n = 0; n < N; ++n) z[n] = std::polar(1.0, -t_base * spec.ln[n]);
        for (std::size_t m = lo; m < hi; ++m) {
            const double left = T0 + w * double(m);
            double acc = 0;
            for (int j = 0; j < 12; ++j) {
                complex<double> D = 0;
                for (std::size_t n = 0; n < N; ++n) D += spec.r[n] * z[n] * off[n][j];
                acc += qd::kGL12[j].w * f(left + xi[j], D);
            }
            panel_sum[m] = 0.5 * w * acc;
            for (std::size_t n = 0; n < N; ++n) z[n] *= step[n];
        }
    };

    unsigned nt = std::min<unsigned>(std::thread::hardware_concurrency(), 16);
    if (nt <= 1 || n_chunks < 2) {
        std::vector<complex<double>> z(N);
        for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c, z);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                std::vector<complex<double>> z(N);
                for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                    run_chunk(c, z);
            });
        for (auto& th : pool) th.join();
    }
    return qd::pairwise_sum(panel_sum);
}

}  // namespace

double dpoly_meansq(unsigned k, std::uint64_t N, double T0, double T1,
                    const arith::DivisorTable& table, double* error_estimate,
                    double* achieved_T1, double max_node_ops) {
    if (N == 0 || T1 < T0) throw std::invalid_argument("dpoly_meansq: bad arguments");
    if (achieved_T1) *achieved_T1 = T1;
    if (T1 == T0) {
        if (error_estimate) *error_estimate = 0;
        return 0;
    }
    const double node_cost = double(N) * 12.0 / 0.25;  // nodes per unit t times N
    if ((T1 - T0) * node_cost > max_node_ops) {
        T1 = T0 + std::max(0.25, max_node_ops / node_cost);
        if (achieved_T1) *achieved_T1 = T1;
    }
    const PolySpec spec = make_spec(k, N, table);
    const auto sq = [](double, complex<double> D) { return std::norm(D); };
    const double fine = integrate_dirichlet(spec, T0, T1, 0.25, sq);
    if (error_estimate) {
        const double coarse = integrate_dirichlet(spec, T0, T1, 0.5, sq);
        *error_estimate = std::abs(fine - coarse);
    }
    return fine;
}

MvDiagonal mv_diagonal(unsigned k, std::uint64_t N, double T,
                       const arith::DivisorTable& table) {
    if (table.k != k || N > table.x_max)
        throw std::invalid_argument("mv_diagonal: table does not cover N");
    MvDiagonal out{0, 0};
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double d2 = double(table.values[n]) * double(table.values[n]);
        out.main += d2 / double(n);
        out.o_scale += d2;
    }
    out.main *= T;
    return out;
}

report::PredictionReport conjecture4_probe(unsigned k, double eta, double T,
                                           const arith::DivisorTable& table) {
    if (k == 0 || k > 2)
        throw std::invalid_argument("conjecture4_probe: k = 1 (or exploratory 2) only");
    if (eta < 0 || eta > 1) throw std::invalid_argument("conjecture4_probe: eta in [0,1]");
    const auto N = static_cast<std::uint64_t>(std::llround(std::pow(T, 1.0 + eta)));
    double err = 0;
    const double value = dpoly_meansq(k, N, T, 2.0 * T, table, &err);

    const double ak = singular::a_k_eval(k, 100000, singular::AkForm::eq51).value;
    const auto w = exactpoly::w_poly(k);
    double wk = 0;
    for (std::size_t i = w.coefficients().size(); i-- > 0;)
        wk = wk * eta + exactpoly::to_double(w.coefficients()[i]);
    const double kk = double(k) * k;
    const double predicted =
        wk * ak / std::tgamma(kk + 1.0) * T * std::pow(std::log(T), kk);

    report::PredictionReport r;
    r.k = k;
    r.x = T;
    r.h = 0;
    r.predicted = predicted;
    r.uncertainty = err;
    r.actual = value;
    r.rel_err = report::relative_error(predicted, value);
    char buf[128];
    std::snprintf(buf, sizeof buf, "probe-c4;v1;k=%u;eta=%.17g;T=%.17g;N=%llu", k, eta, T,
                  static_cast<unsigned long long>(N));
    r.fingerprint = report::fingerprint_hex(buf);
    return r;
}

Conjecture2Report conjecture2_probe(double T, double eta,
                                    const arith::DivisorTable& table, bool m_zero) {
    if (T < 500) throw std::invalid_argument("conjecture2_probe: T >= 500 required");
    Conjecture2Report r;
    r.T = T;
    r.eta = eta;
    const double budget = T / kTwoPi;  // NM = T/2pi at k = 1

    if (m_zero) {
        r.N = static_cast<std::uint64_t>(std::llround(4.0 * budget));
        r.M = 0;
    } else {
        // c = 1/2pi keeps N = budget at eta = 0; clamp so that M >= 1/2
        const double n_raw = std::pow(T, 1.0 + eta) / kTwoPi;
        r.N = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::llround(n_raw)),
                                        1, static_cast<std::uint64_t>(2.0 * budget));
        r.M = static_cast<std::uint64_t>(budget / double(r.N));  // floor
    }

    const PolySpec specN = make_spec(1, r.N, table);
    const auto sq = [](double, complex<double> D) { return std::norm(D); };
    r.meansq_N = integrate_dirichlet(specN, T, 2.0 * T, 0.25, sq);
    if (r.M >= 1) {
        const PolySpec specM = make_spec(1, r.M, table);
        r.meansq_M = integrate_dirichlet(specM, T, 2.0 * T, 0.25, sq);
        // cross term 2 Re int chi(1/2-it) D_N D_M dt with chi(1/2-it) = e^{2 i theta}
        const std::uint64_t M = r.M;
        const auto cross = [M](double t, complex<double> D) {
            complex<double> DM = 0;
            for (std::uint64_t m = 1; m <= M; ++m)
                DM += std::polar(1.0 / std::sqrt(double(m)), -t * std::log(double(m)));
            const complex<double> chi = std::polar(1.0, 2.0 * rs_theta(t));
            return 2.0 * (chi * D * DM).real();
        };
        r.cross = integrate_dirichlet(specN, T, 2.0 * T, 0.25, cross);
    }
    r.moment = moment_integral(1, T, 2.0 * T).value;
    r.sum_ratio = (r.meansq_N + r.meansq_M) / r.moment;
    r.cross_fraction = std::abs(r.cross) / (r.meansq_N + r.meansq_M);
    return r;
}

}  // namespace zm::zetanum
