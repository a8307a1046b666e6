#include "solenoid/map.hpp"

#include <cmath>
#include <numbers>

namespace solenoid {

namespace detail {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double PhiEval::eval(double x, std::span<const int64_t> residues) const {
    if (table) {
        const auto& v = *values;
        const size_t m = v.size();
        double u = (x + static_cast<double>(residues[0])) * inv_level_fact;
        if (u >= 1.0) u -= 1.0;
        double pos = u * static_cast<double>(m);
        auto i0 = static_cast<size_t>(pos);
        if (i0 >= m) i0 = m - 1;
        double fr = pos - static_cast<double>(i0);
        size_t i1 = i0 + 1 == m ? 0 : i0 + 1;
        return v[i0] + (v[i1] - v[i0]) * fr;
    }
    double out = constant;
    for (size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        int64_t ar = ((t.a % t.b) * residues[i]) % t.b;
        if (ar < 0) ar += t.b;
        double theta = t.q * x + static_cast<double>(ar) / static_cast<double>(t.b);
        theta -= std::floor(theta);
        out += t.A * std::cos(kTwoPi * theta) + t.B * std::sin(kTwoPi * theta);
    }
    return out;
}

double PhiEval::slope(double x, std::span<const int64_t> residues) const {
    if (table) {
        const auto& v = *values;
        const size_t m = v.size();
        double u = (x + static_cast<double>(residues[0])) * inv_level_fact;
        if (u >= 1.0) u -= 1.0;
        auto i0 = static_cast<size_t>(u * static_cast<double>(m));
        if (i0 >= m) i0 = m - 1;
        size_t i1 = i0 + 1 == m ? 0 : i0 + 1;
        return (v[i1] - v[i0]) * static_cast<double>(m) * inv_level_fact;
    }
    double out = 0.0;
    for (size_t i = 0; i < terms.size(); ++i) {
        const Term& t = terms[i];
        int64_t ar = ((t.a % t.b) * residues[i]) % t.b;
        if (ar < 0) ar += t.b;
        double theta = t.q * x + static_cast<double>(ar) / static_cast<double>(t.b);
        theta -= std::floor(theta);
        out += kTwoPi * t.q * (-t.A * std::sin(kTwoPi * theta) + t.B * std::cos(kTwoPi * theta));
    }
    return out;
}

LeafStep step_leaf(double x, double alpha_x, double phi) {
    double s1 = x + alpha_x;
    double c1 = std::floor(s1);
    double x1 = s1 - c1;
    if (x1 >= 1.0) {
        x1 -= 1.0;
        c1 += 1.0;
    }
    double s2 = x1 + phi;
    double c2 = std::floor(s2);
    double x2 = s2 - c2;
    if (x2 >= 1.0) {
        x2 -= 1.0;
        c2 += 1.0;
    }
    return {x2, static_cast<int64_t>(c1) + static_cast<int64_t>(c2)};
}

}  // namespace detail

namespace {

detail::PhiEval compile(const DisplacementSpec& phi) {
    detail::PhiEval e;
    if (const auto* tab = std::get_if<LevelPeriodicTable>(&phi)) {
        e.table = true;
        e.values = &tab->values;
        e.level_fact = factorial(tab->level).convert_to<int64_t>();
        e.inv_level_fact = 1.0 / static_cast<double>(e.level_fact);
        return e;
    }
    const auto& p = std::get<CharacterPolynomial>(phi);
    e.constant = p.constant;
    for (const auto& t : p.terms)
        e.terms.push_back({t.q.to_double(), t.q.num_i64(), t.q.den_i64(), t.A, t.B});
    return e;
}

double compute_min_slope(const DisplacementSpec& phi) {
    if (const auto* p = std::get_if<CharacterPolynomial>(&phi)) {
        double budget = 0.0;
        for (const auto& t : p->terms)
            budget += 2.0 * std::numbers::pi * std::abs(t.q.to_double()) *
                      (std::abs(t.A) + std::abs(t.B));
        return 1.0 - budget;
    }
    const auto& tab = std::get<LevelPeriodicTable>(phi);
    const double m = static_cast<double>(tab.values.size());
    const double jf = static_cast<double>(factorial(tab.level).convert_to<int64_t>());
    double lo = 1.0;
    for (size_t i = 0; i < tab.values.size(); ++i) {
        double dv = tab.values[(i + 1) % tab.values.size()] - tab.values[i];
        lo = std::min(lo, 1.0 + dv * m / jf);
    }
    return lo;
}

std::vector<int64_t> residues_for(const detail::PhiEval& e, const ProfiniteInt& t) {
    std::vector<int64_t> r(e.residue_count());
    for (size_t i = 0; i < r.size(); ++i) r[i] = t.residue_mod(e.residue_modulus(i));
    return r;
}

}  // namespace

SolenoidMap::SolenoidMap(SolenoidPoint alpha, DisplacementSpec phi)
    : alpha_(std::move(alpha)), phi_(std::move(phi)) {
    // A closed table form (duplicated endpoint) is folded before compiling.
    if (auto* tab = std::get_if<LevelPeriodicTable>(&phi_)) {
        if (tab->values.size() >= 2 && tab->values.front() == tab->values.back())
            tab->values.pop_back();
    }
    validate_displacement(phi_, alpha_.depth());
    eval_ = compile(phi_);
    phi_lo_ = displacement_lower_bound(phi_);
    phi_hi_ = displacement_upper_bound(phi_);
    min_slope_ = compute_min_slope(phi_);
}

SolenoidMap SolenoidMap::identity(int depth) {
    return SolenoidMap(identity_point(depth), CharacterPolynomial{});
}

SolenoidMap SolenoidMap::rotation(double c, int depth) {
    return SolenoidMap(identity_point(depth), CharacterPolynomial{c, {}});
}

SolenoidMap SolenoidMap::translation(SolenoidPoint alpha) {
    return SolenoidMap(std::move(alpha), CharacterPolynomial{});
}

bool SolenoidMap::is_pure_rotation() const { return displacement_is_constant(phi_); }

double SolenoidMap::rotation_constant() const { return displacement_constant(phi_); }

bool SolenoidMap::alpha_is_zero() const {
    return alpha_.x() == 0.0 && alpha_.t().residue() == 0;
}

double SolenoidMap::phi_at(const SolenoidPoint& z) const {
    auto res = residues_for(eval_, z.t());
    return eval_.eval(z.x(), res);
}

double SolenoidMap::phi_slope_at(const SolenoidPoint& z) const {
    auto res = residues_for(eval_, z.t());
    return eval_.slope(z.x(), res);
}

int SolenoidMap::factoring_level(int max_level) const {
    return displacement_factoring_level(phi_, max_level);
}

int64_t SolenoidMap::fiber_modulus() const { return displacement_fiber_modulus(phi_); }

SolenoidPoint SolenoidMap::apply(const SolenoidPoint& z) const {
    if (z.depth() != depth()) throw std::invalid_argument("incompatible truncation depths");
    double phi = phi_at(z);
    auto st = detail::step_leaf(z.x(), alpha_.x(), phi);
    ProfiniteInt t(z.depth(), z.t().residue() + alpha_.t().residue() + st.carry);
    return SolenoidPoint(st.x, std::move(t));
}

SolenoidPoint SolenoidMap::apply_n(SolenoidPoint z, int64_t n) const {
    for (int64_t i = 0; i < n; ++i) z = apply(z);
    return z;
}

LeafMap::LeafMap(const SolenoidMap& f, ProfiniteInt fiber_base)
    : f_(&f), t0_(std::move(fiber_base)) {
    if (!f.alpha_is_zero())
        throw std::invalid_argument("leaf lift requires zero translation part");
    if (t0_.depth() != f.depth()) throw std::invalid_argument("incompatible truncation depths");
}

double LeafMap::operator()(double u) const {
    return u + f_->phi_at(SolenoidPoint(u, t0_));
}

double LeafMap::slope(double u) const {
    return 1.0 + f_->phi_slope_at(SolenoidPoint(u, t0_));
}

double LeafMap::invert(double v) const {
    // Safeguarded Newton on F(u) - v with a monotone bracket.
    double lo = v - f_->phi_upper_bound();
    double hi = v - f_->phi_lower_bound();
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 128; ++it) {
        double err = (*this)(u)-v;
        if (std::abs(err) < 1e-14) return u;
        if (err > 0)
            hi = u;
        else
            lo = u;
        double d = slope(u);
        double step = err / std::max(d, 0.25 * std::max(f_->min_leaf_slope(), 1e-3));
        double next = u - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        u = next;
    }
    return u;
}

}  // namespace solenoid
