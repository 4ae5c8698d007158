#pragma once

#include <array>
#include <string_view>

namespace kepler::solar {

struct PlanetRecord {
    std::string_view name;
    double eps;  // orbital eccentricity
};

/// The eight planets in Sun order, with the orbital eccentricities embedded
/// at build time. All values are below 0.21; all but Mercury below 0.1.
const std::array<PlanetRecord, 8>& load_planets();

/// Periapsis-to-apoapsis speed ratio (1 + eps) / (1 - eps).
double planet_speed_ratio(const PlanetRecord& rec);

}  // namespace kepler::solar
