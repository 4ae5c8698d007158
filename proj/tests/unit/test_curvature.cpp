#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "kepler/curvature.hpp"
#include "kepler/ellipse.hpp"
#include "kepler/errors.hpp"

using namespace kepler::geom;
using kepler::DegenerateCurvatureError;

namespace {

/// Circumradius of the triangle (a, b, c): R = |ab| |bc| |ca| / (4 area).
double circumradius(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a;
    const Vec2 bc = c - b;
    const Vec2 ca = a - c;
    const double twice_area = std::abs(cross_z(ab, c - a));
    return norm(ab) * norm(bc) * norm(ca) / (2.0 * twice_area);
}

Vec2 ellipse_point(double a, double b, double u) { return {a * std::cos(u), b * std::sin(u)}; }

}  // namespace

TEST_CASE("curvature radius of the unit circle") {
    CHECK(curvature_radius({0, 1}, {-1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("curvature radius of uniform circular motion is the circle radius") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> radius(0.1, 10.0);
    std::uniform_real_distribution<double> rate(0.1, 20.0);
    for (int i = 0; i < 500; ++i) {
        const double R = radius(rng);
        const double omega = rate(rng);
        const Vec2 v{0.0, omega * R};
        const Vec2 acc{-omega * omega * R, 0.0};
        CHECK(curvature_radius(v, acc) == doctest::Approx(R).epsilon(1e-12));
    }
}

TEST_CASE("curvature radius at the ellipse vertex equals b^2/a") {
    // The vertex on the major axis of the a=5, b=3 ellipse; parametric
    // derivatives of (a cos u, b sin u) at u = 0.
    const double a = 5.0, b = 3.0;
    const Vec2 v{0.0, b};
    const Vec2 acc{-a, 0.0};
    const double formula = curvature_radius(v, acc);
    CHECK(formula == doctest::Approx(b * b / a).epsilon(1e-15));

    // Independent construction: circumcircle through three nearby samples.
    double prev_err = 1e9;
    for (const double h : {0.02, 0.005, 0.00125}) {
        const double circ =
            circumradius(ellipse_point(a, b, -h), ellipse_point(a, b, 0.0), ellipse_point(a, b, h));
        const double err = std::abs(circ - formula) / formula;
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-5);
}

TEST_CASE("degenerate curvature throws for collinear motion") {
    CHECK_THROWS_AS(curvature_radius({1, 0}, {2, 0}), DegenerateCurvatureError);
    CHECK_THROWS_AS(curvature_radius({0, 0}, {1, 0}), DegenerateCurvatureError);
}

TEST_CASE("normal acceleration projection on axis-aligned cases") {
    CHECK(normal_accel_projection({-1, 0}, {0, 1}) == 1.0);
    CHECK(normal_accel_projection({0, 2}, {0, 1}) == 0.0);
}

TEST_CASE("normal acceleration projection equals |a| cos(angle to the normal)") {
    const double s = 1.0 / std::sqrt(2.0);
    const Vec2 acc{-s, s};
    const Vec2 v{0.0, 3.0};
    // Angle route: the angle between acc and v is 45 deg, so the normal
    // component is |acc| sin(45 deg) = 1/sqrt(2).
    const double cos_to_v = dot(acc, v) / (norm(acc) * norm(v));
    const double expected = norm(acc) * std::sin(std::acos(cos_to_v));
    CHECK(normal_accel_projection(acc, v) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(normal_accel_projection(acc, v) == doctest::Approx(s).epsilon(1e-12));
}

TEST_CASE("normal acceleration times curvature reproduces v^2/R") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const Vec2 v{coord(rng), coord(rng)};
        const Vec2 acc{coord(rng), coord(rng)};
        if (norm(v) < 1e-2 || std::abs(cross_z(v, acc)) < 1e-3) {
            continue;
        }
        const double R = curvature_radius(v, acc);
        CHECK(normal_accel_projection(acc, v) ==
              doctest::Approx(norm_sq(v) / R).epsilon(1e-12));
    }
}

TEST_CASE("normal acceleration projection rejects zero velocity") {
    CHECK_THROWS_AS(normal_accel_projection({1, 0}, {0, 0}), std::domain_error);
}
