#include "solenoid/character.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace solenoid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ResolvedChar {
    int64_t a;
    int64_t b;
};

ResolvedChar resolve(const Character& chi, int depth) {
    int64_t a = chi.q.num_i64();
    int64_t b = chi.q.den_i64();
    if (factorial(depth) % b != 0)
        throw std::invalid_argument("character not resolvable at this depth");
    return {a, b};
}

}  // namespace

double char_phase(const Character& chi, const SolenoidPoint& z) {
    auto [a, b] = resolve(chi, z.depth());
    int64_t r = z.t().residue_mod(b);
    int64_t ar = ((a % b) * r) % b;
    if (ar < 0) ar += b;
    return chi.q.to_double() * z.x() + static_cast<double>(ar) / static_cast<double>(b);
}

BigRational char_phase_exact(const Character& chi, const SolenoidPoint& z) {
    auto [a, b] = resolve(chi, z.depth());
    int64_t r = z.t().residue_mod(b);
    BigRational leaf = BigRational(chi.q.num(), chi.q.den()) * BigRational(z.x());
    return leaf + BigRational(BigInt(a) * r, BigInt(b));
}

std::complex<double> char_eval(const Character& chi, const SolenoidPoint& z) {
    double theta = char_phase(chi, z);
    theta -= std::floor(theta);
    return {std::cos(kTwoPi * theta), std::sin(kTwoPi * theta)};
}

IrrationalityReport is_irrational(const SolenoidPoint& z, int64_t denominator_bound, double tol) {
    if (denominator_bound < 1) throw std::invalid_argument("denominator bound must be positive");
    const BigInt kf = factorial(z.depth());
    for (int64_t b = 1; b <= denominator_bound; ++b) {
        if (kf % b != 0) throw std::invalid_argument("character not resolvable at this depth");
    }

    IrrationalityReport report;
    report.depth = z.depth();
    report.denominator_bound = denominator_bound;
    report.numerator_factor = 2 * denominator_bound;
    report.tolerance = tol;

    for (int64_t b = 1; b <= denominator_bound; ++b) {
        const double y = z.x() + static_cast<double>(z.t().residue_mod(b));
        const int64_t a_max = report.numerator_factor * b;
        for (int64_t a = 1; a <= a_max; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const double theta = static_cast<double>(a) * y / static_cast<double>(b);
            const double dist = std::abs(theta - std::round(theta));
            if (dist <= tol) {
                report.irrational = false;
                report.witness = Rational(BigInt(a), BigInt(b));
                return report;
            }
        }
    }
    report.irrational = true;
    return report;
}

}  // namespace solenoid
