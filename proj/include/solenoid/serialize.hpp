#pragma once

#include "solenoid/map.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace solenoid {

using Json = nlohmann::json;

// Wire formats:
//   Rational            "a/b"
//   ProfiniteInt        {"depth": K, "residue": "decimal-string"}
//   SolenoidPoint       {"x": float, "t": ProfiniteInt}
//   Character           "a/b"
//   DisplacementSpec    {"kind": "poly", "c": float, "terms": [{"q": "a/b", "A": f, "B": f}]}
//                       {"kind": "table", "level": j, "values": [f, ...]}
//   SolenoidMap         {"alpha": SolenoidPoint, "phi": DisplacementSpec}

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const ProfiniteInt& t);
/// Loads at the requested working depth: deeper stored values are projected,
/// shallower ones are rejected ("cannot refine a truncation").
ProfiniteInt profinite_from_json(const Json& j, int working_depth);

Json to_json(const SolenoidPoint& z);
SolenoidPoint point_from_json(const Json& j, int working_depth);

Json to_json(const DisplacementSpec& phi);
DisplacementSpec displacement_from_json(const Json& j);

Json to_json(const SolenoidMap& f);
SolenoidMap map_from_json(const Json& j, int working_depth);

struct ExperimentConfig {
    int depth = 6;
    SolenoidMap map;
    std::vector<SolenoidPoint> seeds;
    int64_t n = 100000;
    uint64_t rng_seed = 1;
    Json params;  // command-specific knobs, passed through

    ExperimentConfig() : map(SolenoidMap::identity(6)) {}
};

/// Parses and validates a config document. Overrides (when nonnegative /
/// nonempty) replace the stored depth / n / rng_seed before the map and
/// seeds are constructed. Throws std::invalid_argument naming the offending
/// field.
ExperimentConfig load_config(const Json& doc, int depth_override = -1, int64_t n_override = -1,
                             int64_t seed_override = -1);

uint64_t fnv1a64(const std::string& bytes);
std::string config_hash_hex(const Json& doc);

/// Fixed-width float formatting used by every CSV/JSON writer, so identical
/// runs produce byte-identical artifacts.
std::string format_double(double v);

}  // namespace solenoid
