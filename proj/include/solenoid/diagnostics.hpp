#pragma once

#include "solenoid/rotation.hpp"

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace solenoid {

/// Occupancy grid over leaf bins x level-j fiber classes.
struct CoverageGrid {
    int x_bins = 0;
    int fiber_level = 1;
    int64_t fiber_classes = 1;  // fiber_level!
    std::vector<uint8_t> visited;
    int64_t visited_count = 0;
    double fill_fraction = 0.0;
};

enum class MinimalityVerdict { FullSolenoid, CantorLike, FixedOrTrapped };

const char* to_string(MinimalityVerdict v);

struct ClassifyParams {
    int x_bins = 256;
    int fiber_level = 3;
    /// Plateau threshold on the fill increment across the last two schedule
    /// entries, as an absolute fill fraction.
    double plateau_tol = 0.005;
    /// Below this final fill the orbit counts as trapped.
    double trapped_fill = 0.05;
};

struct ClassifyResult {
    MinimalityVerdict verdict = MinimalityVerdict::FixedOrTrapped;
    std::vector<std::pair<int64_t, double>> fill_curve;
    bool fiber_marginal_full = false;
    int64_t cells = 0;
    int64_t visited = 0;
    double full_threshold = 0.0;  // 1 - 2/B
};

/// Empirical probe of the minimal-set dichotomy: marks grid cells along the
/// orbit at each schedule checkpoint. FullSolenoid when the fill exceeds
/// 1 - 2/B at the last checkpoint and kept growing until saturation;
/// CantorLike when the fill plateaus strictly below that with the fiber
/// marginal fully covered; FixedOrTrapped when the orbit stagnates at a
/// tiny fill. Thresholds are explicit and reported with the verdict.
ClassifyResult classify_minimality(const SolenoidMap& f, const SolenoidPoint& z0,
                                   const std::vector<int64_t>& schedule,
                                   const ClassifyParams& params = {});

/// (1/N) * sum_{j<N} chi_q(f^j(z0)).
std::complex<double> weyl_sum(const SolenoidMap& f, const Character& chi, const SolenoidPoint& z0,
                              int64_t N);

/// Exact geometric-series bound 2 / (N * |1 - chi_q(rho)|) for a pure
/// rotation with rotation element rho = alpha + sigma(c). Infinity when the
/// character kills the rotation element.
double weyl_rotation_bound(const SolenoidMap& f, const Character& chi, int64_t N);

struct CircleRotation {
    double leaf_rate = 0.0;   // (lift^n(x0) - x0) / n, in leaf units
    double normalized = 0.0;  // leaf_rate / j!
};

/// Independent classical rotation-number computation for a map that factors
/// through the level-j circle: plain double iteration of the induced circle
/// map, no solenoid arithmetic. Requires alpha = 0.
CircleRotation circle_rotation_number(const SolenoidMap& f, int level, double x0, int64_t n);

}  // namespace solenoid
