#pragma once

#include "solenoid/rotation.hpp"

#include <complex>

namespace solenoid {

/// Point of the mapping torus of f: a solenoid point and a height s in [0,1).
/// The class [z, 1] = [f(z), 0] is never stored; flow stepping keeps s canonical.
struct SuspensionPoint {
    SolenoidPoint z;
    double s = 0.0;
};

/// Character (q, n) of the suspension: chi(z, s) = chi_q(z) * exp(2*pi*i*n*s).
struct SuspensionCharacter {
    Rational q;
    int64_t n = 0;

    friend SuspensionCharacter operator+(const SuspensionCharacter& a, const SuspensionCharacter& b) {
        return {a.q + b.q, a.n + b.n};
    }
};

std::complex<double> suspension_char_eval(const SuspensionCharacter& chi, const SuspensionPoint& p);

/// Suspension flow: (z, s) flows for time t to (f^m(z), t+s-m), m = floor(t+s).
/// Forward time only (m must be nonnegative).
SuspensionPoint flow(const SolenoidMap& f, const SuspensionPoint& p, double t);

/// 1-cocycle of the character along the flow:
/// C(t, (z,s)) = q * D_m(z) + n*t with m = floor(t+s). At t = 1, s = 0 this
/// is q*phi(z) + n.
double cocycle(const SolenoidMap& f, const SuspensionCharacter& chi, double t,
               const SuspensionPoint& p);

/// |C(t+u, p) - C(u, flow(p,t)) - C(t, p)|.
double cocycle_identity_defect(const SolenoidMap& f, const SuspensionCharacter& chi, double t,
                               double u, const SuspensionPoint& p);

/// |chi(flow(p,t)) - exp(2*pi*i*C(t,p)) * chi(p)|.
double character_cocycle_defect(const SolenoidMap& f, const SuspensionCharacter& chi, double t,
                                const SuspensionPoint& p);

enum class MeasureKind { Birkhoff, Dirac, Haar };

/// Operational invariant-measure specification: orbit data (seed, n), a
/// Dirac mass at a fixed point, or exact Haar for pure rotations.
struct MeasureSpec {
    MeasureKind kind = MeasureKind::Haar;
    std::optional<SolenoidPoint> seed;
    int64_t n = 0;

    static MeasureSpec birkhoff(SolenoidPoint seed, int64_t n) {
        return {MeasureKind::Birkhoff, std::move(seed), n};
    }
    static MeasureSpec dirac(SolenoidPoint fixed_point) {
        return {MeasureKind::Dirac, std::move(fixed_point), 0};
    }
    static MeasureSpec haar() { return {}; }
};

/// H(chi_{q,n}) = q*r + n where r is the rotation estimate under the measure.
double H_hom(const SolenoidMap& f, const MeasureSpec& mu, const SuspensionCharacter& chi);

/// Rotation element recovered through the character homomorphism. Shares the
/// displacement sums with the direct estimator, so the two paths agree
/// exactly; verifies that exp(2*pi*i*H) does not depend on n.
RotationEstimate rotation_element_from_H(const SolenoidMap& f, const MeasureSpec& mu);

/// Quotient metric of d(z,z') + |s - s'| with the wraparound identified
/// through f: minimum over alignment shifts of up to four steps either way.
double suspension_metric(const SolenoidMap& f, const SuspensionPoint& p, const SuspensionPoint& q);

/// |d(flow(p,t), flow(q,t)) - d(p,q)|. Requires a pure translation.
double isometry_defect(const SolenoidMap& f, const SuspensionPoint& p, const SuspensionPoint& q,
                       double t);

}  // namespace solenoid
