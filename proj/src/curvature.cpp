#include "kepler/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "kepler/errors.hpp"

namespace kepler::geom {

double curvature_radius(Vec2 v, Vec2 acc) {
    const double speed = norm(v);
    const double speed_cubed = speed * speed * speed;
    const double area = std::abs(cross_z(v, acc));
    if (speed_cubed == 0.0 || area < 1e-14 * speed_cubed) {
        throw DegenerateCurvatureError(
            "curvature_radius: velocity and acceleration are collinear, "
            "straight-line motion has no finite radius");
    }
    return speed_cubed / area;
}

double normal_accel_projection(Vec2 acc, Vec2 v) {
    const double speed = norm(v);
    if (speed == 0.0) {
        throw std::domain_error("normal_accel_projection: zero velocity");
    }
    return std::abs(cross_z(acc, v)) / speed;
}

}  // namespace kepler::geom
