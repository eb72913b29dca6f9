#pragma once

#include "hardy/catalog.hpp"

#include <cstdint>
#include <utility>

namespace hardy::oracle {

struct ExitMoments {
    double two_mean_time = 0;  // estimate of twice the expected exit time
    double se_time = 0;        // standard error of two_mean_time
    double mean_sq_exit = 0;   // estimate of the expected squared exit modulus
    double se_sq_exit = 0;
    double eps = 0;
    std::size_t samples = 0;
    std::size_t capped = 0;    // trajectories stopped by the step cap
};

// One walk-on-spheres trajectory from (x0, y0): jumps to a uniform point on
// the largest centred circle known to fit in the domain, accumulating d^2/2
// per jump, and stops within eps of the boundary (or at the step cap).
// Returns {accumulated time, squared modulus of the stopping point}.
std::pair<double, double> wos_trajectory(const catalog::Geometry& g, double x0, double y0,
                                         double eps, std::uint64_t stream_seed,
                                         bool* capped = nullptr);

// Runs `samples` independent trajectories from the case base point. Each
// trajectory derives its own generator from (seed, index), so the estimate
// is reproducible and independent of evaluation order; sums are reduced
// block-wise in index order.
ExitMoments estimate_exit_moments(const catalog::Geometry& g, std::size_t samples,
                                  double eps, std::uint64_t seed);

} // namespace hardy::oracle
