#include "zetamoments/localseries.hpp"

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace zm::localseries {

TaylorSeries TaylorSeries::constant(qreal value, std::size_t order) {
    TaylorSeries t(order);
    t[0] = value;
    return t;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("TaylorSeries: order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("TaylorSeries: order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(qreal s) {
    for (auto& x : c_) x *= s;
    return *this;
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("TaylorSeries: order mismatch");
    TaylorSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < b.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TaylorSeries TaylorSeries::pow_u(unsigned n) const {
    TaylorSeries r = constant(1, order());
    TaylorSeries b = *this;
    for (; n; n >>= 1) {
        if (n & 1) r = r * b;
        if (n > 1) b = b * b;
    }
    return r;
}

TaylorSeries TaylorSeries::reciprocal() const {
    if (c_[0] == 0) throw std::domain_error("TaylorSeries::reciprocal: zero constant term");
    TaylorSeries r(order());
    r[0] = qreal(1) / c_[0];
    for (std::size_t m = 1; m < order(); ++m) {
        qreal acc = 0;
        for (std::size_t i = 1; i <= m; ++i) acc += c_[i] * r[m - i];
        r[m] = -acc / c_[0];
    }
    return r;
}

qreal TaylorSeries::evaluate(qreal s) const {
    qreal acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i];
    return acc;
}

TaylorSeries exp_series(qreal L, std::size_t order) {
    TaylorSeries t(order);
    qreal term = 1;
    t[0] = 1;
    for (std::size_t m = 1; m < order; ++m) {
        term *= L / qreal(static_cast<long>(m));
        t[m] = term;
    }
    return t;
}

namespace {

// Exact Bernoulli numbers B_0..B_{2J} by the defining recurrence, as qreal.
std::vector<qreal> bernoulli_q(unsigned max_even) {
    const unsigned n = max_even;
    std::vector<mpq_class> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        mpq_class acc(0);
        for (unsigned j = 0; j < m; ++j) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), m + 1, j);
            acc += mpq_class(c) * b[j];
        }
        b[m] = -acc / mpq_class(m + 1);
    }
    std::vector<qreal> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        // num/den in qreal; both fit comfortably up to B_48
        out[m] = q_parse(b[m].get_num().get_str().c_str()) /
                 q_parse(b[m].get_den().get_str().c_str());
    }
    return out;
}

const std::vector<qreal>& bernoulli_table() {
    static const std::vector<qreal> table = bernoulli_q(48);
    return table;
}

}  // namespace

const std::vector<qreal>& bernoulli_numbers() { return bernoulli_table(); }

qreal zeta_em_q(qreal s) {
    if (s == 1) throw std::domain_error("zeta_em_q: pole at s = 1");
    const auto& B = bernoulli_table();
    const int N = 42, J = 22;
    qreal sum = 0;
    for (int n = 1; n < N; ++n) sum += qpow(qreal(n), -s);
    const qreal Nq = N;
    sum += qpow(Nq, 1 - s) / (s - 1);
    sum += qpow(Nq, -s) / 2;
    // correction sum: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    qreal rising = s;           // s(s+1)...(s+2j-2), updated per j
    qreal fact = 2;             // (2j)!
    qreal npow = qpow(Nq, -s - 1);
    for (int j = 1; j <= J; ++j) {
        sum += B[2 * j] / fact * rising * npow;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        npow /= Nq * Nq;
    }
    return sum;
}

qreal prime_zeta_q(qreal x) {
    if (x < 2) throw std::domain_error("prime_zeta_q: x >= 2 required");
    qreal acc = 0;
    for (int j = 1; j <= 64; ++j) {
        const int mu = arith::mobius(static_cast<std::uint64_t>(j));
        if (mu == 0) continue;
        const qreal term = qreal(mu) / j * qlog(zeta_em_q(j * x));
        acc += term;
        if (qabs(term) < qreal(1e-40) && j > 4) break;
    }
    return acc;
}

namespace {

const std::array<qreal, 10>& stieltjes_raw() {
    static const std::array<qreal, 10> table = {
        q_parse("0.577215664901532860606512090082402431"),
        q_parse("-0.0728158454836767248605863758749013191"),
        q_parse("-0.00969036319287231848453038603521252936"),
        q_parse("0.00205383442030334586616004654275338429"),
        q_parse("0.00232537006546730005746817017752606800"),
        q_parse("0.000793323817301062701753334877444444831"),
        q_parse("-0.000238769345430199609872421841908004278"),
        q_parse("-0.000527289567057751046074097505478858282"),
        q_parse("-0.000352123353803039509602052165001208742"),
        q_parse("-0.0000343947744180880481779146237982273906"),
    };
    return table;
}

// zeta(1+s) from the table: 1/s + sum (-1)^n gamma_n s^n / n!
qreal zeta_from_table(qreal s) {
    const auto& g = stieltjes_raw();
    qreal acc = 1 / s, fact = 1, spow = 1;
    for (int n = 0; n < 10; ++n) {
        if (n) {
            fact *= n;
            spow *= s;
        }
        const qreal t = g[n] * spow / fact;
        acc += (n % 2 == 0) ? t : -t;
    }
    return acc;
}

double validate_stieltjes() {
    static const qreal sample[] = {qreal(-0.2), qreal(-0.1), qreal(0.05), qreal(0.1),
                                   qreal(0.2)};
    qreal worst = 0;
    for (qreal s : sample) {
        const qreal r = qabs(zeta_from_table(s) - zeta_em_q(1 + s));
        if (r > worst) worst = r;
    }
    return to_double(worst);
}

}  // namespace

double stieltjes_validation_residual() { return validate_stieltjes(); }

const std::array<qreal, 10>& stieltjes() {
    static const bool ok = [] {
        // truncation at |s| <= 0.2 sits far below this threshold, so any
        // failure means a corrupted literal
        if (validate_stieltjes() > 1e-14)
            throw std::logic_error("Stieltjes table failed Euler-Maclaurin validation");
        return true;
    }();
    (void)ok;
    return stieltjes_raw();
}

qreal euler_gamma() { return stieltjes()[0]; }

TaylorSeries zeta_shifted_pow(unsigned k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("zeta_shifted_pow: k >= 1 required");
    if (order == 0 || order > 11)
        throw std::invalid_argument("zeta_shifted_pow: order beyond Stieltjes table");
    const auto& g = stieltjes();
    TaylorSeries u(order);
    u[0] = 1;  // s*zeta(1+s) = 1 + sum (-1)^n gamma_n s^{n+1} / n!
    qreal fact = 1;
    for (std::size_t m = 1; m < order; ++m) {
        if (m > 1) fact *= static_cast<long>(m - 1);
        const qreal t = g[m - 1] / fact;
        u[m] = (m % 2 == 1) ? t : -t;
    }
    return u.pow_u(k);
}

namespace {

// d_k(p^e) as qreal, exact for the ranges used here.
qreal dk_pp_q(unsigned k, unsigned long e) {
    // C(k+e-1, e) incrementally
    qreal v = 1;
    for (unsigned long i = 1; i < k; ++i) v = v * qreal(static_cast<long>(e + i)) / qreal(static_cast<long>(i));
    return v;
}

}  // namespace

TaylorSeries g_local(unsigned k, std::uint64_t p, unsigned alpha, std::size_t order,
                     double tol) {
    if (k == 0 || p < 2) throw std::invalid_argument("g_local: k >= 1, p prime required");
    if (!(tol > 0)) throw std::invalid_argument("g_local: tol > 0 required");
    if (alpha == 0) return TaylorSeries::constant(1, order);

    const qreal lp = qlog(qreal(static_cast<long long>(p)));
    const qreal invp = qreal(1) / qreal(static_cast<long long>(p));

    // S(s) = sum_j d_k(p^{j+alpha}) p^{-j} e^{-j s log p}
    TaylorSeries S(order);
    qreal b = dk_pp_q(k, alpha);  // d_k(p^{j+alpha}) p^{-j} at j = 0
    qreal prev_weight = -1;
    const unsigned long j_cap = 20000;
    for (unsigned long j = 0;; ++j) {
        if (j > j_cap) throw std::runtime_error("g_local: j-sum failed to converge");
        // contribution of term j to each coefficient, plus its total weight
        qreal pw = 1, fact = 1, weight = 0;
        const qreal x = -qreal(static_cast<long>(j)) * lp;
        for (std::size_t m = 0; m < order; ++m) {
            if (m) {
                pw *= x;
                fact *= static_cast<long>(m);
            }
            const qreal c = b * pw / fact;
            S[m] += c;
            weight += qabs(c);
        }
        // geometric-with-polynomial tail: once weights decrease and the
        // step ratio is below 1, bound the remainder by a geometric series
        if (j > order + k + 4 && prev_weight > 0 && weight < prev_weight) {
            const qreal ratio = weight / prev_weight;
            if (ratio < qreal(0.97) && to_double(weight * ratio / (1 - ratio)) < tol) break;
        }
        prev_weight = weight;
        b *= qreal(static_cast<long>(k + j + alpha)) / qreal(static_cast<long>(j + 1 + alpha)) * invp;
    }

    // (1 - p^{-1-s})^k = (1 - p^{-1} e^{-s log p})^k
    TaylorSeries t = exp_series(-lp, order);
    t *= invp;
    TaylorSeries f = TaylorSeries::constant(1, order);
    f -= t;
    return f.pow_u(k) * S;
}

namespace {

struct LocalKey {
    std::uint64_t p;
    unsigned alpha;
    bool operator<(const LocalKey& o) const {
        return p != o.p ? p < o.p : alpha < o.alpha;
    }
};

// Shared implementation over an explicit prime-power factorization.
TaylorSeries G_series_impl(unsigned k, const std::vector<arith::PrimePower>& pf,
                           std::size_t order, double tol) {
    std::map<LocalKey, TaylorSeries> memo;
    auto local = [&](std::uint64_t p, unsigned alpha) -> const TaylorSeries& {
        const LocalKey key{p, alpha};
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, g_local(k, p, alpha, order, tol)).first;
        return it->second;
    };

    const std::size_t r = pf.size();
    TaylorSeries G(order);
    for (std::size_t dmask = 0; dmask < (std::size_t(1) << r); ++dmask) {
        // d = prod of selected primes (squarefree); mu(d) = (-1)^popcount
        qreal d = 1, phi_d = 1;
        for (std::size_t i = 0; i < r; ++i)
            if (dmask >> i & 1) {
                d *= qreal(static_cast<long long>(pf[i].p));
                phi_d *= qreal(static_cast<long long>(pf[i].p - 1));
            }
        const int mu_d = (__builtin_popcountll(dmask) % 2) ? -1 : 1;
        for (std::size_t emask = dmask;; emask = (emask - 1) & dmask) {
            qreal e = 1;
            for (std::size_t i = 0; i < r; ++i)
                if (emask >> i & 1) e *= qreal(static_cast<long long>(pf[i].p));
            const int mu_e = (__builtin_popcountll(emask) % 2) ? -1 : 1;

            // g_k(1+s, q e / d): exponent alpha_i - [i in d] + [i in e]
            TaylorSeries g = TaylorSeries::constant(1, order);
            for (std::size_t i = 0; i < r; ++i) {
                unsigned a = pf[i].e;
                if (dmask >> i & 1) --a;
                if (emask >> i & 1) ++a;
                if (a > 0) g = g * local(pf[i].p, a);
            }
            // d^{1+s} e^{-(1+s)} = (d/e) e^{s log(d/e)}
            TaylorSeries term = g * exp_series(qlog(d / e), order);
            term *= qreal(mu_d * mu_e) * d / (phi_d * e);
            G += term;
            if (emask == 0) break;
        }
    }
    return G;
}

}  // namespace

TaylorSeries G_series(unsigned k, std::uint64_t q, std::size_t order, double tol) {
    if (q == 0) throw std::invalid_argument("G_series: q >= 1 required");
    if (q == 1) return TaylorSeries::constant(1, order);
    return G_series_impl(k, arith::factorize(q).factors, order, tol);
}

TaylorSeries G_series_pp(unsigned k, std::uint64_t p, unsigned alpha, std::size_t order,
                         double tol) {
    if (alpha == 0) return TaylorSeries::constant(1, order);
    return G_series_impl(k, {{p, alpha}}, order, tol);
}

qreal G_at1_closed(unsigned k, std::uint64_t p, unsigned alpha, double tol) {
    if (k == 0) throw std::invalid_argument("G_at1_closed: k >= 1 required");
    if (alpha == 0) return 1;
    if (k == 1) return 0;  // d_0 vanishes beyond n = 1 and alpha >= 1
    const qreal invp = qreal(1) / qreal(static_cast<long long>(p));
    qreal sum = 0;
    qreal b = dk_pp_q(k - 1, alpha);
    for (unsigned long j = 0;; ++j) {
        sum += b;
        const qreal next = b * qreal(static_cast<long>(k - 1 + j + alpha)) /
                           qreal(static_cast<long>(j + 1 + alpha)) * invp;
        if (to_double(next / (1 - invp)) < tol && j > k + 4) break;
        if (j > 100000) throw std::runtime_error("G_at1_closed: no convergence");
        b = next;
    }
    return qpow_u(1 - invp, k - 1) * sum;
}

std::vector<qreal> P_poly(unsigned k, std::uint64_t q, std::size_t order, double tol) {
    if (q == 0) throw std::invalid_argument("P_poly: q >= 1 required");
    const TaylorSeries A = zeta_shifted_pow(k, order) * G_series(k, q, order, tol);
    std::vector<qreal> out(k);
    for (unsigned n = 0; n < k && n < order; ++n) out[n] = A[n];
    return out;
}

double P_k_eval(unsigned k, double x, std::uint64_t q, std::size_t order, double tol,
                double* cancellation) {
    const auto A = P_poly(k, q, order, tol);
    const qreal L = qlog(qreal(x) / qreal(static_cast<long long>(q)));
    qreal acc = 0, fact = 1, maxmag = 0;
    // sum_{n<k} A_n L^{k-1-n} / (k-1-n)!  -- assemble from highest power down
    for (unsigned n = 0; n < k; ++n) {
        const unsigned m = k - 1 - n;
        qreal lf = 1;
        fact = 1;
        for (unsigned i = 1; i <= m; ++i) {
            lf *= L;
            fact *= i;
        }
        const qreal term = A[n] * lf / fact;
        acc += term;
        if (qabs(term) > maxmag) maxmag = qabs(term);
    }
    if (cancellation)
        *cancellation = (acc == 0) ? 0.0 : to_double(maxmag / qabs(acc));
    return to_double(acc);
}

double hstar_local_factor(unsigned k, std::uint64_t p, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("hstar_local_factor: tol > 0 required");
    const qreal invp = qreal(1) / qreal(static_cast<long long>(p));
    // G_k(1, p^a) sequence; order-1 series carry just the value
    auto Gval = [&](unsigned a) -> qreal { return G_series_pp(k, p, a, 1, tol * 1e-3)[0]; };
    qreal sum = 0;
    qreal ppow = 1;
    qreal Ga = Gval(0);
    for (unsigned a = 0;; ++a) {
        const qreal Gnext = Gval(a + 1);
        const qreal term = (Ga * Ga - Gnext * Gnext * invp * invp) / ppow;
        sum += term;
        const double scale = to_double((Ga * Ga + Gnext * Gnext) / ppow);
        if (a > 4 && scale < tol) break;
        if (a > 400) throw std::runtime_error("hstar_local_factor: no convergence");
        Ga = Gnext;
        ppow *= qreal(static_cast<long long>(p));
    }
    const unsigned km1 = k - 1;
    return to_double(qpow_u(1 - invp, km1 * km1) * sum);
}

}  // namespace zm::localseries
