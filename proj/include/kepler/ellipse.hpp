#pragma once

#include "kepler/vec.hpp"

namespace kepler::geom {

/// Ellipse parameter bundle. All five parameters are stored redundantly and
/// kept mutually consistent:
///
///   f = sqrt(a^2 - b^2),  eps = f/a,  p = b^2/a.
///
/// Construct through ellipse_from_axes or ellipse_from_conic; validate()
/// checks the consistency relations to 1e-12 relative.
struct EllipseGeometry {
    double a;    // semi-major axis
    double b;    // semi-minor axis
    double f;    // focal half-distance
    double eps;  // eccentricity, in [0, 1)
    double p;    // semi-latus rectum
};

/// Throws std::domain_error if the bundle violates a >= b > 0 or the
/// consistency relations.
void validate(const EllipseGeometry& g);

EllipseGeometry ellipse_from_axes(double a, double b);

/// Inverse of the conic parameterization: a = p/(1-eps^2), b = p/sqrt(1-eps^2).
/// Throws std::domain_error for eps >= 1 (parabolic/hyperbolic conics have no
/// finite axes).
EllipseGeometry ellipse_from_conic(double p, double eps);

/// Focal polar equation of the ellipse,
///
///   r(theta) = p / (1 - eps * cos(theta)),
///
/// with the polar origin at a focus. NOTE the minus sign: theta = 0 is the
/// APOapsis (r = a(1+eps), the far vertex) and theta = pi the periapsis.
/// Most textbooks write 1 + eps*cos(theta), which shifts theta by pi.
double polar_radius(double p, double eps, double theta);

Vec2 polar_to_cartesian(double r, double theta);

/// pi * a * b.
double ellipse_area(const EllipseGeometry& g);

}  // namespace kepler::geom
