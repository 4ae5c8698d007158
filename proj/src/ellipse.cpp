#include "kepler/ellipse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kepler::geom {

namespace {
constexpr double kConsistencyTol = 1e-12;
}

void validate(const EllipseGeometry& g) {
    if (!std::isfinite(g.a) || !std::isfinite(g.b) || !std::isfinite(g.f) ||
        !std::isfinite(g.eps) || !std::isfinite(g.p)) {
        throw std::domain_error("ellipse: non-finite parameter");
    }
    if (!(g.a >= g.b && g.b > 0.0)) {
        throw std::domain_error("ellipse: requires a >= b > 0");
    }
    // Scale the focal relations by a and the latus relation by b^2.
    const bool ok = std::abs(g.f - std::sqrt((g.a - g.b) * (g.a + g.b))) <= kConsistencyTol * g.a &&
                    std::abs(g.eps * g.a - g.f) <= kConsistencyTol * g.a &&
                    std::abs(g.p * g.a - g.b * g.b) <= kConsistencyTol * g.b * g.b &&
                    g.eps >= 0.0 && g.eps < 1.0;
    if (!ok) {
        throw std::domain_error("ellipse: inconsistent parameter bundle");
    }
}

EllipseGeometry ellipse_from_axes(double a, double b) {
    if (!(b > 0.0) || !(a >= b)) {
        throw std::domain_error("ellipse_from_axes: requires a >= b > 0");
    }
    EllipseGeometry g;
    g.a = a;
    g.b = b;
    g.f = std::sqrt((a - b) * (a + b));
    g.eps = g.f / a;
    g.p = b * b / a;
    validate(g);
    return g;
}

EllipseGeometry ellipse_from_conic(double p, double eps) {
    if (!(p > 0.0)) {
        throw std::domain_error("ellipse_from_conic: requires p > 0");
    }
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw std::domain_error(
            "ellipse_from_conic: requires eps in [0, 1); parabolic/hyperbolic "
            "conics have no finite axes");
    }
    EllipseGeometry g;
    g.eps = eps;
    g.p = p;
    g.a = p / ((1.0 - eps) * (1.0 + eps));
    g.b = p / std::sqrt((1.0 - eps) * (1.0 + eps));
    g.f = g.a * eps;
    validate(g);
    return g;
}

double polar_radius(double p, double eps, double theta) {
    if (!(p > 0.0) || !(eps >= 0.0 && eps < 1.0)) {
        throw std::domain_error("polar_radius: requires p > 0 and eps in [0, 1)");
    }
    return p / (1.0 - eps * std::cos(theta));
}

Vec2 polar_to_cartesian(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

double ellipse_area(const EllipseGeometry& g) {
    validate(g);
    return std::numbers::pi * g.a * g.b;
}

}  // namespace kepler::geom
