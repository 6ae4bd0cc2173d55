// wide.hpp
//
// 128-bit binary float (quadmath) helpers. All truncated-series and
// Euler-product arithmetic runs at this precision (~33.6 significant
// digits); results are rounded to double only at the public API edge.

#pragma once

#include <quadmath.h>

#include <string>

namespace zm {

using qreal = __float128;

inline qreal qabs(qreal x) { return fabsq(x); }
inline qreal qexp(qreal x) { return expq(x); }
inline qreal qlog(qreal x) { return logq(x); }
inline qreal qsqrt(qreal x) { return sqrtq(x); }
inline qreal qpow(qreal x, qreal y) { return powq(x, y); }

// x^n by binary powering, n >= 0
inline qreal qpow_u(qreal x, unsigned long n) {
    qreal r = 1, b = x;
    for (; n; n >>= 1) {
        if (n & 1) r *= b;
        b *= b;
    }
    return r;
}

inline qreal q_parse(const char* s) { return strtoflt128(s, nullptr); }

inline std::string q_to_string(qreal x, int digits = 33) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qe", digits, x);
    return buf;
}

inline double to_double(qreal x) { return static_cast<double>(x); }

}  // namespace zm
