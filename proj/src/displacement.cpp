#include "solenoid/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace solenoid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int64_t kMaxTermComponent = 1'000'000;

const CharacterPolynomial* as_poly(const DisplacementSpec& phi) {
    return std::get_if<CharacterPolynomial>(&phi);
}

const LevelPeriodicTable* as_table(const DisplacementSpec& phi) {
    return std::get_if<LevelPeriodicTable>(&phi);
}

double poly_amplitude(const CharacterPolynomial& p) {
    double s = 0.0;
    for (const auto& t : p.terms) s += std::abs(t.A) + std::abs(t.B);
    return s;
}

}  // namespace

void validate_displacement(const DisplacementSpec& phi, int depth) {
    if (const auto* p = as_poly(phi)) {
        if (!std::isfinite(p->constant)) throw std::invalid_argument("non-finite constant");
        double slope_budget = 0.0;
        for (const auto& t : p->terms) {
            if (!std::isfinite(t.A) || !std::isfinite(t.B))
                throw std::invalid_argument("non-finite term amplitude");
            if (t.q.is_zero()) throw std::invalid_argument("zero-frequency term; fold into the constant");
            int64_t a = t.q.num_i64();
            int64_t b = t.q.den_i64();
            if (std::abs(a) > kMaxTermComponent || b > kMaxTermComponent)
                throw std::invalid_argument("character term out of supported range");
            if (factorial(depth) % b != 0)
                throw std::invalid_argument("character not resolvable at this depth");
            slope_budget += kTwoPi * std::abs(t.q.to_double()) * (std::abs(t.A) + std::abs(t.B));
        }
        if (slope_budget >= 1.0)
            throw std::invalid_argument("leafwise monotonicity check failed");
        return;
    }
    const auto* tab = as_table(phi);
    if (tab->level < 1 || tab->level > depth)
        throw std::invalid_argument("table level outside the working depth");
    auto values = tab->values;
    if (values.size() >= 2 && values.front() == values.back()) {
        // closed form: an explicit duplicated endpoint is allowed and folded
        values.pop_back();
    }
    if (values.size() < 2) throw std::invalid_argument("table needs at least two samples");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite table sample");
    const double m = static_cast<double>(values.size());
    const double jf = static_cast<double>(factorial(tab->level).convert_to<int64_t>());
    for (size_t i = 0; i < values.size(); ++i) {
        double dv = values[(i + 1) % values.size()] - values[i];
        if (1.0 + dv * m / jf <= 0.0)
            throw std::invalid_argument("leafwise monotonicity check failed");
    }
}

double displacement_lower_bound(const DisplacementSpec& phi) {
    if (const auto* p = as_poly(phi)) return p->constant - poly_amplitude(*p);
    const auto& v = as_table(phi)->values;
    return *std::min_element(v.begin(), v.end());
}

double displacement_upper_bound(const DisplacementSpec& phi) {
    if (const auto* p = as_poly(phi)) return p->constant + poly_amplitude(*p);
    const auto& v = as_table(phi)->values;
    return *std::max_element(v.begin(), v.end());
}

bool displacement_is_constant(const DisplacementSpec& phi) {
    if (const auto* p = as_poly(phi)) return p->terms.empty();
    const auto& v = as_table(phi)->values;
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

double displacement_constant(const DisplacementSpec& phi) {
    if (!displacement_is_constant(phi))
        throw std::logic_error("displacement is not constant");
    if (const auto* p = as_poly(phi)) return p->constant;
    return as_table(phi)->values.front();
}

int displacement_factoring_level(const DisplacementSpec& phi, int max_level) {
    if (const auto* tab = as_table(phi)) return tab->level <= max_level ? tab->level : 0;
    const auto* p = as_poly(phi);
    for (int j = 1; j <= max_level; ++j) {
        BigInt jf = factorial(j);
        bool ok = true;
        for (const auto& t : p->terms) {
            if (jf % t.q.den_i64() != 0) {
                ok = false;
                break;
            }
        }
        if (ok) return j;
    }
    return 0;
}

int64_t displacement_fiber_modulus(const DisplacementSpec& phi) {
    if (const auto* tab = as_table(phi))
        return factorial(tab->level).convert_to<int64_t>();
    int64_t m = 1;
    for (const auto& t : as_poly(phi)->terms) m = std::lcm(m, t.q.den_i64());
    return m;
}

}  // namespace solenoid
