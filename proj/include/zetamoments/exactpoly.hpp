// exactpoly.hpp
//
// Exact rational arithmetic for the integer coefficients gamma_k(n), the
// mean-square enhancement polynomials w_k(eta), the predicted sixth/eighth
// moment constants, and the closed form of the Keating-Snaith constant g_k.
// Everything here is exact; floating point appears only in the numeric
// convergence probe for the g_k limit.

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zm::exactpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);  // reduced, den > 0
std::string to_string(const Rational& r);                      // "num/den" or "num"
double to_double(const Rational& r);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// Univariate polynomial with exact rational coefficients; coeff[i] * x^i,
// trailing zeros trimmed (the zero polynomial has an empty list).
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    static RationalPolynomial constant(const Rational& c);

    const std::vector<Rational>& coefficients() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coefficient(std::size_t i) const;  // 0 beyond degree

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a,
                                        const RationalPolynomial& b);
    RationalPolynomial scaled(const Rational& s) const;

    Rational operator()(const Rational& x) const;
    // P(a + b x): exact change of variable
    RationalPolynomial compose_linear(const Rational& a, const Rational& b) const;

    bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

  private:
    void trim();
    std::vector<Rational> c_;
};

// Integer coefficients gamma_k(n), n = 0 .. k^2-1; gamma_k(0) = k.
struct GammaCoefficients {
    unsigned k;
    std::vector<BigInt> values;
};

// Closed multinomial form. A multinomial coefficient with any negative part
// vanishes, the only convention consistent with gamma_k(0) = k.
BigInt gamma_kn(unsigned k, unsigned n);

// Independent route: for n >= 1, (-1)^n times the coefficient of
// s^{k-1} w^{k-1} in (1-s-w)^{n-1} (1-s)^k (1-w)^k by exact bivariate
// expansion; for n = 0 the contour value as a finite binomial sum.
BigInt gamma_kn_oracle(unsigned k, unsigned n);

GammaCoefficients gamma_table(unsigned k);

// The published mean-square formula has two misprinted neighbours; the
// variants exist so a test can show they fail to reproduce w_2.
enum class WVariant {
    statement,        // the correct form
    extra_recip_np1,  // an additional 1/(n+1) inside the sum
    mk_display,       // k^2/(n+1) * (-1)^n gamma in place of C(k^2, n+1) gamma
};

// w_k(eta): degree-k^2 polynomial; w_1 = 1, w_k(0) = 1.
RationalPolynomial w_poly(unsigned k, WVariant variant = WVariant::statement);

// k = 3: w_3(eta) + w_3(1-eta), constant 42 for every eta in [0,1];
// k = 4: requires eta = 1, returns 2 w_4(1) = 24024.
Rational moment_constant_prediction(unsigned k, const Rational& eta);

// g_k = Gamma(1+k^2) prod_{j=0}^{k-1} j!/(j+k)!  (exact closed product).
Rational ks_gk(unsigned k);

// Numeric partial product Gamma(1+k^2) N^{-k^2} prod_{j<=N} of
// Gamma(j)Gamma(j+2k)/Gamma(j+k)^2, for the convergence check against ks_gk.
double ks_gk_partial(unsigned k, unsigned N);

}  // namespace zm::exactpoly
