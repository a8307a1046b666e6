#pragma once

#include "solenoid/profinite.hpp"

namespace solenoid {

/// A point of the solenoid in canonical form: leaf coordinate x in [0,1),
/// fiber coordinate a truncated profinite integer. The constructor applies
/// the integer action (x, t) -> (x - g, t + g) with g = floor(x), so any
/// real leaf coordinate is accepted.
class SolenoidPoint {
public:
    SolenoidPoint(double x, ProfiniteInt t);

    double x() const { return x_; }
    const ProfiniteInt& t() const { return t_; }
    int depth() const { return t_.depth(); }

    friend bool operator==(const SolenoidPoint& a, const SolenoidPoint& b) {
        return a.x_ == b.x_ && a.t_ == b.t_;
    }
    friend bool operator!=(const SolenoidPoint& a, const SolenoidPoint& b) { return !(a == b); }

private:
    double x_;
    ProfiniteInt t_;
};

SolenoidPoint canonicalize(double x, ProfiniteInt t);
SolenoidPoint identity_point(int depth);

/// One-parameter embedding of the reals onto the base leaf, r -> [r, 0].
SolenoidPoint base_leaf(double r, int depth);

SolenoidPoint add(const SolenoidPoint& z, const SolenoidPoint& w);
SolenoidPoint negate(const SolenoidPoint& z);
SolenoidPoint subtract(const SolenoidPoint& z, const SolenoidPoint& w);

/// Ultrametric distance on the fiber group at the given depth:
/// 0 for the zero residue, otherwise 2^-j with j the largest level whose
/// factorial divides the residue.
double fiber_distance(const BigInt& residue, int depth);

/// Translation-invariant metric at the working depth. The leaf part is
/// Euclidean along leaves, the fiber part is the profinite ultrametric;
/// the minimum over integer shifts in {-1,0,1} suffices because both
/// points are canonical.
double metric(const SolenoidPoint& z, const SolenoidPoint& w);

/// Coordinate of z on the level-j covering circle R/j!Z, in [0, j!).
double level_project(const SolenoidPoint& z, int j);

}  // namespace solenoid
