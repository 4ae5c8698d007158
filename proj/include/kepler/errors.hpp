#pragma once

#include <stdexcept>
#include <string>

namespace kepler {

/// The planet reached the force-field singularity at the origin.
struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// State energy is non-negative: the trajectory is parabolic or hyperbolic
/// and cannot be described by a bound ellipse.
struct UnboundOrbitError : std::runtime_error {
    explicit UnboundOrbitError(const std::string& what) : std::runtime_error(what) {}
};

/// Zero areal constant: velocity is parallel to the radius vector, so the
/// motion is radial and has no orbital plane.
struct DegenerateOrbitError : std::runtime_error {
    explicit DegenerateOrbitError(const std::string& what) : std::runtime_error(what) {}
};

/// Velocity and acceleration are collinear: straight-line motion, the
/// osculating circle degenerates to infinite radius.
struct DegenerateCurvatureError : std::runtime_error {
    explicit DegenerateCurvatureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kepler
