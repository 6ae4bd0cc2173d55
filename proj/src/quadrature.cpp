#include "zetamoments/quadrature.hpp"

#include <cmath>
#include <thread>

namespace zm::quadrature {

double pairwise_sum(std::vector<double>& v) {
    if (v.empty()) return 0;
    std::size_t n = v.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
        if (n % 2) {
            v[half] = v[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return v[0];
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        std::size_t n_panels, unsigned threads) {
    if (n_panels == 0 || a == b) return 0;
    const double w = (b - a) / static_cast<double>(n_panels);
    std::vector<double> partial(n_panels, 0.0);
    auto run = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double left = a + w * static_cast<double>(i);
            double s = 0;
            for (const Node& n : kGL12) s += n.w * f(left + 0.5 * w * (n.x + 1.0));
            partial[i] = 0.5 * w * s;
        }
    };
    unsigned nt = threads ? threads : std::thread::hardware_concurrency();
    if (nt <= 1 || n_panels < 16) {
        run(0, n_panels);
    } else {
        nt = std::min<unsigned>(nt, 16);
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_panels + nt - 1) / nt;
        for (unsigned t = 0; t < nt; ++t) {
            const std::size_t lo = t * chunk, hi = std::min(n_panels, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return pairwise_sum(partial);
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, std::size_t initial_panels, double rtol,
                                  unsigned max_doublings, unsigned threads) {
    AdaptiveResult r;
    std::size_t panels = std::max<std::size_t>(1, initial_panels);
    double prev = integrate_panels(f, a, b, panels, threads);
    r.points = panels * kGL12.size();
    for (unsigned i = 0; i < max_doublings; ++i) {
        panels *= 2;
        const double cur = integrate_panels(f, a, b, panels, threads);
        r.points += panels * kGL12.size();
        r.error_estimate = std::abs(cur - prev);
        r.value = cur;
        if (r.error_estimate <= rtol * std::max(std::abs(cur), 1e-300)) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    r.value = prev;
    r.converged = r.error_estimate <= rtol * std::max(std::abs(prev), 1e-300);
    return r;
}

}  // namespace zm::quadrature
