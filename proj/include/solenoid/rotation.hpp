#pragma once

#include "solenoid/orbit.hpp"

#include <optional>

namespace solenoid {

/// Rotation element estimate. The full element is alpha + sigma(r): r is the
/// leafwise part, alpha_fiber the translation part of the map.
struct RotationEstimate {
    double r = 0.0;
    SolenoidPoint alpha_fiber;
    int64_t n_iterates = 0;
    /// Birkhoff fluctuation diagnostic: max deviation of the partial
    /// averages over the last decade of iterates from the final average.
    double ci_halfwidth = 0.0;
};

RotationEstimate rotation_element_birkhoff(const SolenoidMap& f, const SolenoidPoint& z0,
                                           int64_t n);

/// Exact value for pure rotations: characters integrate to zero against
/// Haar, so the displacement integral is the constant term. Throws for any
/// other map.
RotationEstimate rotation_element_exact_haar(const SolenoidMap& f);

struct IntervalParams {
    double tolerance = 1e-6;        // degenerate-interval threshold
    int64_t irr_denominator_bound = 6;
    bool parallel = false;
};

struct RotationInterval {
    double r_min = 0.0;
    double r_max = 0.0;
    bool pseudo_irrational = false;
    IrrationalityReport irrationality;
    std::vector<RotationEstimate> per_seed;
};

RotationInterval rotation_interval(const SolenoidMap& f, const std::vector<SolenoidPoint>& seeds,
                                   int64_t n, const IntervalParams& params = {});

/// Deviations e_m = D_m - m*tau for m = 1..n. tau is accumulated alongside
/// the displacement sum, so a pure rotation with tau = c yields exact zeros.
struct BmvResult {
    std::vector<double> deviations;
    double sup_abs = 0.0;
    double slope = 0.0;  // least-squares slope of e_m over the second half
};

BmvResult bmv_deviations(const SolenoidMap& f, const SolenoidPoint& z0, double tau, int64_t n,
                         bool keep_series = true);

/// Finite-horizon sup construction for the semiconjugacy onto the rotation:
/// H_N(z) = z shifted along its leaf by max_{0<=m<=N} (D_m - m*tau).
/// stability = |H_N - H_{N/2}| reports the approximation quality.
struct SemiconjugacyResult {
    SolenoidPoint h;
    double stability = 0.0;
    double sup_term = 0.0;
    int64_t argmax = 0;
};

SemiconjugacyResult semiconjugacy_sup(const SolenoidMap& f, double tau, const SolenoidPoint& z,
                                      int64_t N);

/// Grid scan over leaf bins x fiber classes for |phi| minima; tangential
/// zeros are accepted when a grid point lands below tol_accept, otherwise a
/// sign change is bisected along the leaf. Requires alpha = 0.
std::optional<SolenoidPoint> find_fixed_point(const SolenoidMap& f, int64_t resolution,
                                              double tol_accept = 1e-10);

/// Leafwise Birkhoff rate of the conjugate map h o f o h^-1 from the given
/// seed, with h inverted numerically along leaves. Requires both maps to
/// have zero translation part.
double conjugated_rotation_estimate(const SolenoidMap& f, const SolenoidMap& h,
                                    const SolenoidPoint& seed, int64_t n);

}  // namespace solenoid
