// quadrature.hpp
//
// Fixed Gauss-Legendre rules and a deterministic composite integrator:
// per-panel sums run in a fixed order and panels are combined by pairwise
// tree reduction, so threaded and serial runs agree bit for bit.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace zm::quadrature {

struct Node {
    double x;  // abscissa on [-1, 1]
    double w;
};

inline constexpr std::array<Node, 8> kGL8 = {{
    {-0.9602898564975362316835609, 0.1012285362903762591525314},
    {-0.7966664774136267395915539, 0.2223810344533744705443560},
    {-0.5255324099163289858177390, 0.3137066458778872873379622},
    {-0.1834346424956498049394761, 0.3626837833783619829651504},
    {0.1834346424956498049394761, 0.3626837833783619829651504},
    {0.5255324099163289858177390, 0.3137066458778872873379622},
    {0.7966664774136267395915539, 0.2223810344533744705443560},
    {0.9602898564975362316835609, 0.1012285362903762591525314},
}};

inline constexpr std::array<Node, 12> kGL12 = {{
    {-0.9815606342467192506905491, 0.0471753363865118271946160},
    {-0.9041172563704748566784659, 0.1069393259953184309602547},
    {-0.7699026741943046870368938, 0.1600783285433462263346525},
    {-0.5873179542866174472967024, 0.2031674267230659217490645},
    {-0.3678314989981801937526915, 0.2334925365383548087608499},
    {-0.1252334085114689154724414, 0.2491470458134027850005624},
    {0.1252334085114689154724414, 0.2491470458134027850005624},
    {0.3678314989981801937526915, 0.2334925365383548087608499},
    {0.5873179542866174472967024, 0.2031674267230659217490645},
    {0.7699026741943046870368938, 0.1600783285433462263346525},
    {0.9041172563704748566784659, 0.1069393259953184309602547},
    {0.9815606342467192506905491, 0.0471753363865118271946160},
}};

// Deterministic pairwise tree sum.
double pairwise_sum(std::vector<double>& v);

// Composite GL-12 over [a,b] with n_panels equal panels; panels may be
// evaluated by several threads, reduction is deterministic.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        std::size_t n_panels, unsigned threads = 0);

struct AdaptiveResult {
    double value = 0;
    double error_estimate = 0;  // |last refinement change|
    std::size_t points = 0;
    bool converged = false;
};

// Panel doubling until the relative change drops below rtol (or max_doublings).
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, std::size_t initial_panels, double rtol,
                                  unsigned max_doublings = 6, unsigned threads = 0);

}  // namespace zm::quadrature
