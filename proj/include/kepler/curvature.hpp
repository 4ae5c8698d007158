#pragma once

#include "kepler/vec.hpp"

namespace kepler::geom {

/// Radius of the osculating circle of a plane curve from its velocity and
/// acceleration at a point:
///
///   R = |v|^3 / |cross_z(v, acc)|.
///
/// Throws DegenerateCurvatureError when |cross_z(v, acc)| < 1e-14 * |v|^3
/// (collinear v and acc: straight-line motion, infinite radius).
double curvature_radius(Vec2 v, Vec2 acc);

/// Projection of the acceleration onto the normal of the velocity,
/// |cross_z(acc, v)| / |v|. Equals v^2 / curvature_radius(v, acc) whenever
/// the latter is finite. Throws std::domain_error on zero velocity.
double normal_accel_projection(Vec2 acc, Vec2 v);

}  // namespace kepler::geom
