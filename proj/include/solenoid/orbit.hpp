#pragma once

#include "solenoid/map.hpp"

#include <cstdint>
#include <vector>

namespace solenoid {

/// Orbit with exact leafwise displacement accounting:
/// points[m] = f^m(z0), leaf_displacement[m] = D_m = sum_{j<m} phi(f^j(z0)).
struct OrbitRecord {
    std::vector<SolenoidPoint> points;
    std::vector<double> leaf_displacement;
};

OrbitRecord iterate(const SolenoidMap& f, const SolenoidPoint& z0, int64_t n);

/// Streaming orbit iteration in O(1) memory. Keeps the canonical leaf
/// coordinate as a double, the fiber exactly via the accumulated integer
/// carry, and the per-term fiber residues incrementally in 64-bit. The
/// floating point path is identical to repeated apply().
class OrbitWalker {
public:
    OrbitWalker(const SolenoidMap& f, const SolenoidPoint& z0);

    void step();
    void advance(int64_t steps);

    int64_t index() const { return m_; }
    double displacement() const { return disp_sum_; }  // D_m
    double x() const { return x_; }
    int64_t carry_sum() const { return carry_sum_; }
    /// Current fiber residue mod m (m must divide the working modulus range).
    int64_t residue_mod(int64_t m) const;
    SolenoidPoint current() const;
    const SolenoidMap& map() const { return *f_; }

private:
    const SolenoidMap* f_;
    double x_;
    double alpha_x_;
    double disp_sum_ = 0.0;
    int64_t carry_sum_ = 0;
    int64_t alpha_res_step_ = 0;  // unused; per-term alpha residues below
    int64_t m_ = 0;
    ProfiniteInt t0_;
    std::vector<int64_t> res_;        // per-term residues of the current fiber
    std::vector<int64_t> alpha_res_;  // per-term residues of alpha's fiber part
};

}  // namespace solenoid
