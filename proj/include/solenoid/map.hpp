#pragma once

#include "solenoid/displacement.hpp"

#include <memory>
#include <span>

namespace solenoid {

namespace detail {

/// Flattened displacement evaluator. Residues are the fiber residues the
/// spec depends on: one per term (t mod b_j) for polynomials, a single
/// t mod level! for tables.
struct PhiEval {
    struct Term {
        double q;       // a/b as double
        int64_t a;
        int64_t b;
        double A;
        double B;
    };
    bool table = false;
    double constant = 0.0;
    std::vector<Term> terms;           // polynomial kind
    const std::vector<double>* values = nullptr;  // table kind
    int64_t level_fact = 1;
    double inv_level_fact = 1.0;

    double eval(double x, std::span<const int64_t> residues) const;
    double slope(double x, std::span<const int64_t> residues) const;  // d(phi)/dx
    size_t residue_count() const { return table ? 1 : terms.size(); }
    int64_t residue_modulus(size_t i) const { return table ? level_fact : terms[i].b; }
};

struct LeafStep {
    double x;       // canonical leaf coordinate after the step
    int64_t carry;  // total integer carry into the fiber
};

/// One application along the leaf: translate by alpha_x, then shift by phi
/// (evaluated before the translation). Shared by apply() and the orbit
/// walker so both produce bit-identical floating point sequences.
LeafStep step_leaf(double x, double alpha_x, double phi);

}  // namespace detail

/// Homeomorphism f = R_alpha o (id + phi): a translation part alpha and a
/// leafwise displacement phi evaluated at the pre-translation point.
class SolenoidMap {
public:
    SolenoidMap(SolenoidPoint alpha, DisplacementSpec phi);

    static SolenoidMap identity(int depth);
    /// Rotation by the base-leaf element sigma(c): alpha = 0, phi == c.
    static SolenoidMap rotation(double c, int depth);
    static SolenoidMap translation(SolenoidPoint alpha);

    const SolenoidPoint& alpha() const { return alpha_; }
    const DisplacementSpec& phi() const { return phi_; }
    int depth() const { return alpha_.depth(); }

    bool is_pure_rotation() const;   // phi constant (translation composed with leaf shift)
    double rotation_constant() const;
    bool alpha_is_zero() const;

    double phi_at(const SolenoidPoint& z) const;
    double phi_slope_at(const SolenoidPoint& z) const;
    double phi_lower_bound() const { return phi_lo_; }
    double phi_upper_bound() const { return phi_hi_; }
    double min_leaf_slope() const { return min_slope_; }

    int factoring_level(int max_level) const;
    int64_t fiber_modulus() const;

    SolenoidPoint apply(const SolenoidPoint& z) const;
    SolenoidPoint apply_n(SolenoidPoint z, int64_t n) const;

    const detail::PhiEval& compiled() const { return eval_; }

private:
    SolenoidPoint alpha_;
    DisplacementSpec phi_;
    detail::PhiEval eval_;
    double phi_lo_ = 0.0, phi_hi_ = 0.0, min_slope_ = 1.0;
};

/// Lift of an isotopic-to-identity map to the leaf through a fixed fiber
/// base point: F(u) = u + phi([u]) with [u] = canonicalize(u, t0). Strictly
/// increasing homeomorphism of the reals; invert() solves F(x) = v.
class LeafMap {
public:
    LeafMap(const SolenoidMap& f, ProfiniteInt fiber_base);

    double operator()(double u) const;
    double slope(double u) const;
    double invert(double v) const;

private:
    const SolenoidMap* f_;
    ProfiniteInt t0_;
};

}  // namespace solenoid
