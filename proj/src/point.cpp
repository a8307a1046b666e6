#include "solenoid/point.hpp"

#include <cmath>
#include <limits>

namespace solenoid {

namespace {

// Splits x into (fractional part in [0,1), integer floor as BigInt).
// The post-subtraction fix handles values whose fractional part rounds
// up to exactly 1.0.
std::pair<double, BigInt> split_floor(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite leaf coordinate");
    double fl = std::floor(x);
    double frac = x - fl;
    if (frac >= 1.0) {
        frac -= 1.0;
        fl += 1.0;
    }
    BigInt g;
    if (std::abs(fl) < 9.0e18) {
        g = static_cast<int64_t>(fl);
    } else {
        g = BigInt(fl);
    }
    return {frac, g};
}

}  // namespace

SolenoidPoint::SolenoidPoint(double x, ProfiniteInt t) : x_(0.0), t_(std::move(t)) {
    auto [frac, g] = split_floor(x);
    x_ = frac;
    if (g != 0) t_ = ProfiniteInt(t_.depth(), t_.residue() + g);
}

SolenoidPoint canonicalize(double x, ProfiniteInt t) { return SolenoidPoint(x, std::move(t)); }

SolenoidPoint identity_point(int depth) { return SolenoidPoint(0.0, ProfiniteInt(depth, 0)); }

SolenoidPoint base_leaf(double r, int depth) { return SolenoidPoint(r, ProfiniteInt(depth, 0)); }

SolenoidPoint add(const SolenoidPoint& z, const SolenoidPoint& w) {
    if (z.depth() != w.depth()) throw std::invalid_argument("incompatible truncation depths");
    return SolenoidPoint(z.x() + w.x(), z.t() + w.t());
}

SolenoidPoint negate(const SolenoidPoint& z) { return SolenoidPoint(-z.x(), -z.t()); }

SolenoidPoint subtract(const SolenoidPoint& z, const SolenoidPoint& w) {
    return add(z, negate(w));
}

double fiber_distance(const BigInt& residue, int depth) {
    BigInt u = residue % factorial(depth);
    if (u < 0) u += factorial(depth);
    if (u == 0) return 0.0;
    int best = 1;
    for (int j = 2; j <= depth; ++j) {
        if (u % factorial(j) != 0) break;
        best = j;
    }
    return std::ldexp(1.0, -best);
}

double metric(const SolenoidPoint& z, const SolenoidPoint& w) {
    if (z.depth() != w.depth()) throw std::invalid_argument("incompatible truncation depths");
    const BigInt tdiff = z.t().residue() - w.t().residue();
    double best = std::numeric_limits<double>::infinity();
    for (int g = -1; g <= 1; ++g) {
        double leaf = std::abs(z.x() - w.x() + g);
        double fib = fiber_distance(tdiff - g, z.depth());
        best = std::min(best, leaf + fib);
    }
    return best;
}

double level_project(const SolenoidPoint& z, int j) {
    if (j < 1 || j > z.depth()) throw std::invalid_argument("cannot refine a truncation");
    const double circumference = static_cast<double>(factorial(j).convert_to<int64_t>());
    double v = z.x() + static_cast<double>(z.t().residue_mod(static_cast<int64_t>(circumference)));
    if (v >= circumference) v -= circumference;
    return v;
}

}  // namespace solenoid
