#include "zetamoments/report.hpp"

#include <cmath>
#include <cstdio>

namespace zm::report {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fingerprint_hex(std::string_view canonical) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical)));
    return buf;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double relative_error(double predicted, double actual) {
    return std::abs(predicted - actual) / std::max(std::abs(actual), 1.0);
}

std::string to_csv_row(const PredictionReport& r) {
    std::string s;
    s += std::to_string(r.k);
    s += ',';
    s += format_double(r.x);
    s += ',';
    s += std::to_string(r.h);
    s += ',';
    s += format_double(r.predicted);
    s += ',';
    s += format_double(r.uncertainty);
    s += ',';
    s += format_double(r.actual);
    s += ',';
    s += format_double(r.rel_err);
    s += ',';
    s += r.fingerprint;
    return s;
}

}  // namespace zm::report
