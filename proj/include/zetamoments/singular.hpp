// singular.hpp
//
// The singular series f_k(x,d) = sum_q mu(q) q^{-2} P_k(x,qd)^2, the
// correlation main-term derivative m_k'(x,h) = sum_{d|h} f_k(x,d)/d and
// its increments, the Euler-product constants a_k in both published forms
// with a prime-zeta tail correction, the H* local identity report, the
// f_k bound fit, and the log a_k asymptotic trend.

#pragma once

#include "zetamoments/arith.hpp"
#include "zetamoments/report.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace zm::singular {

struct EngineConfig {
    unsigned k = 2;
    std::uint64_t q_cutoff = 3000;  // squarefree q <= Q in the singular series
    std::size_t order = 0;          // series order; 0 means k + 4
    double tol = 1e-26;             // coefficient tolerance for local series
    double c38_safety = 2.0;        // safety factor on the fitted P_k envelope
    double target_rel_tol = 1e-2;   // tail above this fraction flags a diagnostic
    double quad_rtol = 1e-6;        // increment quadrature relative tolerance

    std::size_t effective_order() const { return order ? order : k + 4; }
};

struct ValueWithTail {
    double value = 0;
    double tail = 0;        // reported uncertainty (never silently added)
    bool tol_met = true;    // tail within target_rel_tol of |value|
};

struct IncrementResult {
    double value = 0;
    double tail = 0;        // propagated f_k tail plus quadrature error
    double quad_error = 0;
    bool converged = true;
};

class SingularSeriesEngine {
  public:
    explicit SingularSeriesEngine(EngineConfig cfg);

    const EngineConfig& config() const { return cfg_; }
    std::string fingerprint() const { return fingerprint_; }

    // P_k(x, q) from the cached residue polynomial (double precision path).
    double P_k(double x, std::uint64_t q) const;

    ValueWithTail f_k(double x, std::uint64_t d) const;
    ValueWithTail m_k_prime(double x, std::uint64_t h) const;

    // integral of m_k'(y,h) dy over [x1, x2]; composite Gauss-Legendre on a
    // log axis with panel doubling to quad_rtol.
    IncrementResult m_k_increment(double x1, double x2, std::uint64_t h) const;

    // Fitted constant of |P_k(x,q)| <= C d_k(q) log^{k-1}(qx) on a fixed
    // probe grid, times c38_safety. Drives the reported tails.
    double p_envelope_constant() const;

  private:
    const std::vector<double>& ppoly(std::uint64_t q) const;  // B_m: P = sum B_m L^m
    double tail_estimate(double x, std::uint64_t d, std::uint64_t q_from) const;

    EngineConfig cfg_;
    std::string fingerprint_;
    std::vector<std::int8_t> mu_;         // mobius on [0, Q]
    std::vector<std::uint64_t> dk_ext_;   // d_k on [0, 8Q] for tail sums
    double summatory_bk_ = 0;             // fitted sum_{q<=R} d_k(q)^2 constant
    mutable std::map<std::uint64_t, std::vector<double>> ppoly_cache_;
    mutable std::mutex cache_mutex_;
    mutable double c38_ = 0;
    mutable bool c38_fitted_ = false;
    mutable std::mutex c38_mutex_;
};

enum class AkForm { eq10, eq51 };

struct AkResult {
    double value = 0;      // exp(log_value), 0 on underflow
    double log_value = 0;  // log a_k including the prime-zeta tail correction
    double tail_bound = 0; // bound on the neglected log-tail remainder
};

// Truncated Euler product over p <= prime_cutoff with a tail correction
// from the 1/p expansion of the local log-factor paired with prime zeta
// values; both forms agree by the a_k = a_{1-k} symmetry.
AkResult a_k_eval(unsigned k, std::uint64_t prime_cutoff, AkForm form);

// a_k local factor at p in divisor form: (1-1/p)^{k^2} sum_r d_k(p^r)^2 p^{-r}.
double a_k_local_factor(unsigned k, std::uint64_t p, double tol);

struct HstarRow {
    std::uint64_t p;
    double hstar;
    double ak_local;
    double deviation;
};

struct HstarReport {
    unsigned k;
    std::vector<HstarRow> rows;
    double max_deviation = 0;
};

HstarReport hstar_identity_report(unsigned k, std::span<const std::uint64_t> primes,
                                  double tol = 1e-14);

struct FBoundRow {
    double x;
    std::uint64_t d;
    double f_value;
    double envelope;  // d_{k-1}(d)^2 log^{2k-2} x
    double ratio;
};

struct FBoundReport {
    unsigned k;
    std::vector<FBoundRow> rows;
    double fitted_c = 0;         // max ratio over the grid
    double fitted_c_coarse = 0;  // same on every other grid point
};

FBoundReport f_bound_check(const SingularSeriesEngine& engine,
                           std::span<const double> x_grid,
                           std::span<const std::uint64_t> d_grid);

struct PropositionRow {
    unsigned k;
    double log_ak;
    double predicted;  // -k^2 log(2 e^gamma log k)
    double ratio;      // log_ak / predicted
};

// Rows for k = 2..k_max; rejects P < 2 k_max^2 (the product splits there).
std::vector<PropositionRow> proposition_trend(unsigned k_max, std::uint64_t prime_cutoff);

// For each (x, h): predicted = increment of m_k over [max(1000, x/2), x],
// actual = D_k(x,h) - D_k(x0,h) from the sieve table.
std::vector<report::PredictionReport> correlation_report(
    const SingularSeriesEngine& engine, const arith::DivisorTable& table,
    std::span<const double> x_list, std::span<const std::uint64_t> h_list);

}  // namespace zm::singular
