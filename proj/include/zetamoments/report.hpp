// report.hpp
//
// Prediction records shared by the correlation and moment probes, the
// stable config fingerprint, and decimal serialization helpers. Numbers
// travel as decimal strings so reports compare bit-exactly across tools.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace zm::report {

std::uint64_t fnv1a64(std::string_view s);
std::string fingerprint_hex(std::string_view canonical);

std::string format_double(double v);  // shortest round-trip ("%.17g")

// rel_err = |predicted - actual| / max(|actual|, 1)
double relative_error(double predicted, double actual);

struct PredictionReport {
    unsigned k = 0;
    double x = 0;           // x for correlations, T for moment probes
    std::uint64_t h = 0;    // h for correlations, 0 when unused
    double predicted = 0;
    double uncertainty = 0;
    double actual = 0;
    double rel_err = 0;
    std::string fingerprint;
};

inline constexpr std::string_view kCsvHeader =
    "k,x,h,predicted,uncertainty,actual,rel_err,fingerprint";

std::string to_csv_row(const PredictionReport& r);

}  // namespace zm::report
