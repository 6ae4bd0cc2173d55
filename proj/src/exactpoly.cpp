#include "zetamoments/exactpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace zm::exactpoly {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial({c});
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    a += b;
    return a;
}

RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    a -= b;
    return a;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return RationalPolynomial(std::move(r));
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::compose_linear(const Rational& a,
                                                      const Rational& b) const {
    RationalPolynomial lin({a, b});
    RationalPolynomial acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * lin + RationalPolynomial::constant(c_[i]);
    return acc;
}

namespace {

// (n)! / (a! b! c!) with the zero-on-negative-part convention; a+b+c = n.
BigInt multinomial3(long n, long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) return 0;
    BigInt r = factorial(static_cast<unsigned long>(n));
    r /= factorial(static_cast<unsigned long>(a));
    r /= factorial(static_cast<unsigned long>(b));
    r /= factorial(static_cast<unsigned long>(c));
    return r;
}

void check_gamma_range(unsigned k, unsigned n) {
    if (k == 0) throw std::invalid_argument("gamma_kn: k >= 1 required");
    if (n >= k * k)
        throw std::invalid_argument("gamma_kn: n must satisfy 0 <= n <= k^2-1");
}

// Bivariate polynomial truncated at degree k-1 in each of s and w;
// m[i][j] is the coefficient of s^i w^j.
using Bivar = std::vector<std::vector<BigInt>>;

Bivar bivar_zero(unsigned deg) {
    return Bivar(deg + 1, std::vector<BigInt>(deg + 1, BigInt(0)));
}

Bivar bivar_mul(const Bivar& a, const Bivar& b, unsigned deg) {
    Bivar r = bivar_zero(deg);
    for (unsigned i = 0; i <= deg; ++i)
        for (unsigned j = 0; j <= deg; ++j) {
            if (a[i][j] == 0) continue;
            for (unsigned u = 0; i + u <= deg; ++u)
                for (unsigned v = 0; j + v <= deg; ++v)
                    r[i + u][j + v] += a[i][j] * b[u][v];
        }
    return r;
}

}  // namespace

BigInt gamma_kn(unsigned k, unsigned n) {
    check_gamma_range(k, n);
    if (n == 0) return BigInt(k);
    BigInt sum = 0;
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = 0; j <= k; ++j) {
            const BigInt m = multinomial3(static_cast<long>(n) - 1, static_cast<long>(i) - 1,
                                          static_cast<long>(j) - 1,
                                          static_cast<long>(n) - i - j + 1);
            if (m == 0) continue;
            sum += binomial(k, i) * binomial(k, j) * m;
        }
    return (n % 2 == 0) ? sum : -sum;
}

BigInt gamma_kn_oracle(unsigned k, unsigned n) {
    check_gamma_range(k, n);
    if (n == 0) {
        // sum over residues of (s+w)^m / s^i w^j: only m = i+j-2 survives
        BigInt sum = 0;
        for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = 1; j <= k; ++j) {
                BigInt term = binomial(k, i) * binomial(k, j) * binomial(i + j - 2, i - 1);
                if ((i + j) % 2) sum -= term; else sum += term;
            }
        return sum;
    }
    const unsigned deg = k - 1;  // n >= 1 forces k >= 2 here
    // (1-s)^k and (1-w)^k truncated
    Bivar p = bivar_zero(deg);
    for (unsigned i = 0; i <= deg; ++i)
        for (unsigned j = 0; j <= deg; ++j) {
            BigInt ci = binomial(k, i), cj = binomial(k, j);
            if (i % 2) ci = -ci;
            if (j % 2) cj = -cj;
            p[i][j] = ci * cj;
        }
    // times (1-s-w)^{n-1}
    Bivar base = bivar_zero(deg);
    base[0][0] = 1;
    base[1][0] = -1;
    base[0][1] = -1;
    Bivar acc = bivar_zero(deg);
    acc[0][0] = 1;
    for (unsigned m = 0; m + 1 < n; ++m) acc = bivar_mul(acc, base, deg);
    acc = bivar_mul(acc, p, deg);
    const BigInt g = acc[deg][deg];
    return (n % 2 == 0) ? g : -g;
}

GammaCoefficients gamma_table(unsigned k) {
    GammaCoefficients g{k, {}};
    g.values.reserve(k * k);
    for (unsigned n = 0; n < k * k; ++n) g.values.push_back(gamma_kn(k, n));
    return g;
}

RationalPolynomial w_poly(unsigned k, WVariant variant) {
    if (k == 0 || k > 6) throw std::invalid_argument("w_poly: 1 <= k <= 6 required");
    const unsigned kk = k * k;

    // powers of (1+eta)
    std::vector<RationalPolynomial> pow1p(kk + 1);
    pow1p[0] = RationalPolynomial::constant(Rational(1));
    const RationalPolynomial onep({Rational(1), Rational(1)});
    for (unsigned m = 1; m <= kk; ++m) pow1p[m] = pow1p[m - 1] * onep;

    // w = (1+eta)^{k^2} (1 - sum_n c_n) + sum_n c_n (1+eta)^{k^2-n-1}
    Rational csum(0);
    RationalPolynomial tail;
    for (unsigned n = 0; n < kk; ++n) {
        const BigInt g = gamma_kn(k, n);
        Rational c;
        switch (variant) {
            case WVariant::statement:
                c = Rational(binomial(kk, n + 1) * g);
                break;
            case WVariant::extra_recip_np1:
                c = make_rational(binomial(kk, n + 1) * g, BigInt(n + 1));
                break;
            case WVariant::mk_display: {
                BigInt sg = (n % 2 == 0) ? g : -g;
                c = make_rational(BigInt(kk) * sg, BigInt(n + 1));
                break;
            }
        }
        csum += c;
        tail += pow1p[kk - n - 1].scaled(c);
    }
    RationalPolynomial w = pow1p[kk].scaled(Rational(1) - csum) + tail;
    return w;
}

Rational moment_constant_prediction(unsigned k, const Rational& eta) {
    if (k == 3) {
        if (eta < 0 || eta > 1)
            throw std::invalid_argument("moment_constant_prediction: eta in [0,1] for k=3");
        const RationalPolynomial w = w_poly(3);
        return w(eta) + w(Rational(1) - eta);
    }
    if (k == 4) {
        if (eta != 1)
            throw std::invalid_argument("moment_constant_prediction: eta = 1 required for k=4");
        return Rational(2) * w_poly(4)(Rational(1));
    }
    throw std::invalid_argument("moment_constant_prediction: k must be 3 or 4");
}

Rational ks_gk(unsigned k) {
    if (k == 0) throw std::invalid_argument("ks_gk: k >= 1 required");
    BigInt num = factorial(static_cast<unsigned long>(k) * k);
    BigInt den = 1;
    for (unsigned j = 0; j < k; ++j) {
        num *= factorial(j);
        den *= factorial(j + k);
    }
    return make_rational(num, den);
}

double ks_gk_partial(unsigned k, unsigned N) {
    if (k == 0 || N == 0) throw std::invalid_argument("ks_gk_partial: k, N >= 1 required");
    double logp = std::lgamma(1.0 + double(k) * k) - double(k) * k * std::log(double(N));
    for (unsigned j = 1; j <= N; ++j)
        logp += std::lgamma(double(j)) + std::lgamma(double(j) + 2.0 * k) -
                2.0 * std::lgamma(double(j) + k);
    return std::exp(logp);
}

}  // namespace zm::exactpoly
