#pragma once

#include "solenoid/character.hpp"

#include <variant>
#include <vector>

namespace solenoid {

/// One harmonic of a displacement: A*cos(2*pi*theta) + B*sin(2*pi*theta)
/// where theta is the phase of the character with frequency q.
struct CharacterTerm {
    Rational q;
    double A = 0.0;
    double B = 0.0;
};

/// phi(z) = c + sum of character harmonics. Continuous on the solenoid.
struct CharacterPolynomial {
    double constant = 0.0;
    std::vector<CharacterTerm> terms;
};

/// phi(z) = psi(level-j coordinate of z / j!) with psi a 1-periodic function
/// given by samples at i/M, linearly interpolated, wrapping M -> 0.
struct LevelPeriodicTable {
    int level = 1;
    std::vector<double> values;
};

using DisplacementSpec = std::variant<CharacterPolynomial, LevelPeriodicTable>;

/// Structural and monotonicity checks; throws std::invalid_argument.
/// Sufficient condition for the polynomial kind: sum 2*pi*|q|*(|A|+|B|) < 1.
/// For tables: every interpolated slope of the induced leaf map stays > 0.
void validate_displacement(const DisplacementSpec& phi, int depth);

double displacement_lower_bound(const DisplacementSpec& phi);
double displacement_upper_bound(const DisplacementSpec& phi);

bool displacement_is_constant(const DisplacementSpec& phi);
double displacement_constant(const DisplacementSpec& phi);

/// Smallest j <= max_level such that phi factors through the level-j circle
/// (all character denominators divide j!, or the table level itself).
/// Returns 0 when none does.
int displacement_factoring_level(const DisplacementSpec& phi, int max_level);

/// Modulus m such that phi depends on the fiber only through t mod m.
int64_t displacement_fiber_modulus(const DisplacementSpec& phi);

}  // namespace solenoid
