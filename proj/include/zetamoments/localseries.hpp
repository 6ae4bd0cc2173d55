// localseries.hpp
//
// Fixed-order truncated power series about s = 0 at 128-bit precision,
// the Stieltjes expansion of zeta(1+s), the local Euler factors
// g_k(1+s, p^alpha), the finite sums G_k(1+s, q), and the residue
// extraction that evaluates P_k(x,q) as a polynomial in log(x/q).

#pragma once

#include "zetamoments/arith.hpp"
#include "zetamoments/wide.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zm::localseries {

// Truncated power series: exactly `order` retained coefficients
// (powers s^0 .. s^{order-1}); products are truncated consistently.
class TaylorSeries {
  public:
    explicit TaylorSeries(std::size_t order) : c_(order, qreal(0)) {
        if (order == 0) throw std::invalid_argument("TaylorSeries: order >= 1 required");
    }
    static TaylorSeries constant(qreal value, std::size_t order);

    std::size_t order() const { return c_.size(); }
    qreal operator[](std::size_t i) const { return c_[i]; }
    qreal& operator[](std::size_t i) { return c_[i]; }
    const std::vector<qreal>& coefficients() const { return c_; }

    TaylorSeries& operator+=(const TaylorSeries& o);
    TaylorSeries& operator-=(const TaylorSeries& o);
    TaylorSeries& operator*=(qreal s);
    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);

    TaylorSeries pow_u(unsigned n) const;   // integer power
    TaylorSeries reciprocal() const;        // requires nonzero constant term
    qreal evaluate(qreal s) const;          // Horner

  private:
    std::vector<qreal> c_;
};

// e^{L s} truncated.
TaylorSeries exp_series(qreal L, std::size_t order);

// Stieltjes constants gamma_0 .. gamma_9 (>= 33 digits). The table is
// validated on first use against an independent Euler-Maclaurin sampling
// of zeta(1+s); a corrupted literal aborts with std::logic_error.
const std::array<qreal, 10>& stieltjes();
qreal euler_gamma();

// Max |series - direct| over the validation sample (exposed for tests).
double stieltjes_validation_residual();

// Euler-Maclaurin zeta(s) for real s (s != 1, s > -10 or so); the
// independent oracle behind the Stieltjes table and the prime zeta values.
qreal zeta_em_q(qreal s);

// Exact Bernoulli numbers B_0 .. B_48 from the defining recurrence
// (odd indices beyond B_1 vanish).
const std::vector<qreal>& bernoulli_numbers();

// P(x) = sum_p p^{-x} for real x >= 2, via sum_j mu(j)/j log zeta(jx).
qreal prime_zeta_q(qreal x);

// s^k zeta(1+s)^k about s = 0 (entire; the k-th order pole is carried by
// the explicit shift).
TaylorSeries zeta_shifted_pow(unsigned k, std::size_t order);

// g_k(1+s, p^alpha): (1 - p^{-1-s})^k sum_j d_k(p^{j+alpha}) p^{-j(1+s)},
// the j-sum truncated below tol. alpha = 0 gives the constant series 1.
TaylorSeries g_local(unsigned k, std::uint64_t p, unsigned alpha, std::size_t order,
                     double tol);

// G_k(1+s, q) by the finite double sum over squarefree d | q, e | d.
TaylorSeries G_series(unsigned k, std::uint64_t q, std::size_t order, double tol);

// Same, for q = p^alpha given as (p, alpha); avoids forming p^alpha, which
// the large-alpha tail sums in hstar_local_factor would overflow.
TaylorSeries G_series_pp(unsigned k, std::uint64_t p, unsigned alpha, std::size_t order,
                         double tol);

// Closed form of G_k(1, p^alpha): (1-1/p)^{k-1} sum_j d_{k-1}(p^{alpha+j}) p^{-j}.
// Independent test oracle for the constant coefficient of G_series.
qreal G_at1_closed(unsigned k, std::uint64_t p, unsigned alpha, double tol);

// First k coefficients of s^k zeta^k(1+s) G_k(1+s, q); P_k(x,q) is then
// sum_n A_n log^{k-1-n}(x/q) / (k-1-n)!.
std::vector<qreal> P_poly(unsigned k, std::uint64_t q, std::size_t order, double tol);

// Residue at s = 0 of zeta^k(1+s) G_k(1+s,q) (x/q)^s. If `cancellation`
// is given it receives max partial magnitude / |result| (loss-of-precision
// diagnostic).
double P_k_eval(unsigned k, double x, std::uint64_t q, std::size_t order, double tol,
                double* cancellation = nullptr);

// p-local factor of H*_k(0,0,0):
// (1-1/p)^{(k-1)^2} sum_a (G_k^2(1,p^a) - G_k^2(1,p^{a+1}) p^{-2}) / p^a.
double hstar_local_factor(unsigned k, std::uint64_t p, double tol);

}  // namespace zm::localseries
