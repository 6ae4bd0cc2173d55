// zetanum.hpp
//
// Numerical zeta on the critical line by two independent routes
// (Euler-Maclaurin, and the Riemann-Siegel main sum with seven tabulated
// correction terms), the functional-equation factor chi(s), moment
// integrals I_k(T), long Dirichlet polynomial mean squares with per-n
// phase recurrences, and the numeric probes behind the two-polynomial
// and mean-square conjectures.

#pragma once

#include "zetamoments/arith.hpp"
#include "zetamoments/report.hpp"

#include <complex>
#include <cstdint>

namespace zm::zetanum {

enum class Method { automatic, euler_maclaurin, riemann_siegel };

// switch point of the automatic method: Euler-Maclaurin below (O(t) but
// uniformly accurate), Riemann-Siegel above (O(sqrt t))
inline constexpr double kMethodSwitchT = 200.0;

// Euler-Maclaurin zeta(s), double precision; the reference evaluator.
std::complex<double> zeta_em(std::complex<double> s);

// Riemann-Siegel theta, asymptotic series (excellent for t >= 10).
double rs_theta(double t);

// Z(t) by the Riemann-Siegel formula; meaningful for t >= 2 pi.
double rs_Z(double t, unsigned terms = 7);

// zeta(1/2 + i t).
std::complex<double> zeta_crit(double t, Method method = Method::automatic);

// Configurable evaluator. rs_terms <= 7 (the tabulated corrections);
// operator() raises a diagnostic when the configured terms cannot meet
// the precision target at the requested height.
struct CriticalLineEvaluator {
    Method method = Method::automatic;
    double precision_target = 1e-8;
    double switch_t = kMethodSwitchT;
    unsigned rs_terms = 7;

    std::complex<double> operator()(double t) const;
};

// log Gamma by Stirling with argument promotion; throws near poles.
std::complex<double> log_gamma(std::complex<double> z);

// chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2).
std::complex<double> chi_factor(std::complex<double> s);

struct MomentEstimate {
    unsigned k = 1;
    double T0 = 0, T1 = 0;
    double value = 0;
    double error_estimate = 0;  // change under panel halving
    std::uint64_t points = 0;
    bool exploratory = false;   // k >= 3: desk-scale asymptotics unreachable
};

// integral of |zeta(1/2+it)|^{2k} over [T0, T1]; composite Gauss-Legendre
// panels of width 0.25, error from comparing against width 0.5. If the
// panel budget is exceeded the estimate covers [T0, achieved T1 < T1]
// (a partial result; compare est.T1 against the request).
MomentEstimate moment_integral(unsigned k, double T0, double T1,
                               Method method = Method::automatic,
                               std::size_t max_panels = 2000000);

// refined classical main term of the second moment: T log(T/2pi) + (2g-1)T
double second_moment_main_term(double T);

enum class GkNormalization {
    log_t,                  // (a_k / Gamma(1+k^2)) T log^{k^2} T
    refined_second_moment,  // k = 1 only: the refined oracle above
};

struct GkEstimate {
    double value = 0;
    double a_k = 0;
    MomentEstimate moment;
};

GkEstimate gk_estimate(unsigned k, double T,
                       GkNormalization norm = GkNormalization::log_t);

// mean square of D_{k,N}(1/2+it) = sum_{n<=N} d_k(n) n^{-1/2-it} over
// [T0, T1]; the table must cover N. Evaluation cost scales like N per
// node; when it would exceed max_node_ops the integral is truncated to an
// achievable right endpoint, reported through achieved_T1.
double dpoly_meansq(unsigned k, std::uint64_t N, double T0, double T1,
                    const arith::DivisorTable& table, double* error_estimate = nullptr,
                    double* achieved_T1 = nullptr, double max_node_ops = 4e9);

struct MvDiagonal {
    double main;     // T sum_{n<=N} d_k(n)^2 / n
    double o_scale;  // sum_{n<=N} d_k(n)^2, the off-diagonal allowance scale
};

MvDiagonal mv_diagonal(unsigned k, std::uint64_t N, double T,
                       const arith::DivisorTable& table);

// mean square of D_{k,N} over [T, 2T] with N = T^{1+eta} against
// w_k(eta) (a_k / Gamma(k^2+1)) T log^{k^2} T.
report::PredictionReport conjecture4_probe(unsigned k, double eta, double T,
                                           const arith::DivisorTable& table);

struct Conjecture2Report {
    double T = 0, eta = 0;
    std::uint64_t N = 0, M = 0;
    double meansq_N = 0;
    double meansq_M = 0;
    double cross = 0;      // 2 Re int chi(1/2-it) D_N D_M dt
    double moment = 0;     // int |zeta|^2 over [T, 2T]
    double sum_ratio = 0;  // (meansq_N + meansq_M) / moment
    double cross_fraction = 0;
};

// k = 1 probe of the two-polynomial decomposition; NM = T/2pi, or the
// one-polynomial branch N = 4 T/2pi when m_zero is set.
Conjecture2Report conjecture2_probe(double T, double eta,
                                    const arith::DivisorTable& table,
                                    bool m_zero = false);

}  // namespace zm::zetanum
