#pragma once

#include "solenoid/diagnostics.hpp"
#include "solenoid/suspension.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace solenoid::kernels {

/// Rotation estimates for a batch of seeds. Each orbit is the usual serial
/// recurrence; seeds run concurrently when parallel is set. Results are
/// bit-identical in both modes.
std::vector<RotationEstimate> birkhoff_batch(const SolenoidMap& f,
                                             const std::vector<SolenoidPoint>& seeds, int64_t n,
                                             bool parallel);

/// Weyl average for a pure rotation using the closed-form orbit
/// f^j(z) = z + j*rho. Summation is chunked with a fixed chunk count, so the
/// result does not depend on the number of threads.
std::complex<double> weyl_sum_rotation(const SolenoidMap& f, const Character& chi,
                                       const SolenoidPoint& z0, int64_t N, bool parallel);

struct SuiteResult {
    int64_t samples = 0;
    double max_cocycle_defect = 0.0;
    double max_char_defect = 0.0;
};

/// Random (map, character, t, u, point) samples checked against the cocycle
/// identity and the character-cocycle relation. Sampling is keyed per index,
/// so the sample set is independent of the thread count.
SuiteResult cocycle_suite(int depth, int64_t samples, uint64_t rng_seed, bool parallel);

struct ScanHit {
    SolenoidPoint z;
    double phi_abs;
    int64_t cell_index;
};

/// Minimum of |phi| over the x-bins x fiber-classes grid. Ties resolve to
/// the smallest cell index, so serial and parallel runs agree exactly.
ScanHit fixed_point_scan(const SolenoidMap& f, int64_t resolution, bool parallel);

}  // namespace solenoid::kernels
