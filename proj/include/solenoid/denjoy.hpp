#pragma once

#include "solenoid/displacement.hpp"

namespace solenoid {

/// Parameters for the Denjoy-style circle map: the orbit of an irrational
/// rotation is blown up into affine gaps with geometrically decaying
/// lengths, and the displacement of the resulting homeomorphism is sampled
/// into a level-1 table.
struct DenjoyParams {
    double rho = 0.61803398874989484820;  // construction target rotation number
    double biggest_gap = 0.16;
    double decay = 0.5;
    int half_orbit = 48;      // gaps inserted at the orbit points n = -h..h
    int table_size = 1 << 16;
};

/// Level-1 table whose interpolated map is a finite-resolution Denjoy-type
/// circle homeomorphism: gap images permute affinely, the complement follows
/// the base rotation through the gap-insertion change of coordinates. The
/// sampled table is strictly monotone as a leaf map, so it is a valid
/// displacement. Its own rotation number is close to, but not exactly,
/// params.rho; measure it with circle_rotation_number.
LevelPeriodicTable make_denjoy_table(const DenjoyParams& params = {});

}  // namespace solenoid
