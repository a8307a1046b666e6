#pragma once

#include "solenoid/point.hpp"

#include <complex>
#include <optional>

namespace solenoid {

/// Character of the solenoid indexed by a rational frequency q = a/b.
/// Evaluation at depth K requires b | K!.
struct Character {
    Rational q;
};

/// Phase of the character at z: q*x + a*(t mod b)/b, with the fiber term
/// reduced mod 1. The value of the character is exp(2*pi*i * phase).
double char_phase(const Character& chi, const SolenoidPoint& z);

/// Same phase as an exact rational, valid because doubles are rationals.
/// Used by the exactness checks.
BigRational char_phase_exact(const Character& chi, const SolenoidPoint& z);

std::complex<double> char_eval(const Character& chi, const SolenoidPoint& z);

struct IrrationalityReport {
    bool irrational = false;
    std::optional<Rational> witness;  // first q with chi_q(z) = 1, when found
    int depth = 0;
    int64_t denominator_bound = 0;
    int64_t numerator_factor = 0;  // numerators scanned up to numerator_factor * b per denominator b
    double tolerance = 0.0;

    explicit operator bool() const { return irrational; }
};

/// Certifies (up to the reported bounds) that no nontrivial character with
/// denominator <= D kills z: for each q = a/b scanned, the phase stays at
/// distance > tol from the integers. Denominators must divide K!.
IrrationalityReport is_irrational(const SolenoidPoint& z, int64_t denominator_bound,
                                  double tol = 1e-9);

}  // namespace solenoid
