#include <doctest.h>

#include <cmath>
#include <random>

#include "kepler/vec.hpp"

using namespace kepler::geom;

TEST_CASE("cross_z on unit square, collinear and generic vectors") {
    CHECK(cross_z({1, 0}, {0, 1}) == 1.0);
    CHECK(cross_z({1, 0}, {2, 0}) == 0.0);
    CHECK(cross_z({3, 1}, {1, 2}) == 5.0);
}

TEST_CASE("cross_z magnitude equals the parallelogram area from the dot product") {
    // Independent route: |u||v| sin(angle), with the angle from the dot product.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const Vec2 u{coord(rng), coord(rng)};
        const Vec2 v{coord(rng), coord(rng)};
        const double cos_angle = dot(u, v) / (norm(u) * norm(v));
        const double clamped = std::min(1.0, std::max(-1.0, cos_angle));
        const double area = norm(u) * norm(v) * std::sin(std::acos(clamped));
        CHECK(std::abs(cross_z(u, v)) == doctest::Approx(area).epsilon(1e-6));
    }
}

TEST_CASE("cross_z bilinearity and antisymmetry") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 u{coord(rng), coord(rng)};
        const Vec2 v{coord(rng), coord(rng)};
        const Vec2 w{coord(rng), coord(rng)};
        const double alpha = 3.0 * coord(rng);
        const double beta = 3.0 * coord(rng);
        const double lhs = cross_z(alpha * u + beta * w, v);
        const double rhs = alpha * cross_z(u, v) + beta * cross_z(w, v);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(cross_z(u, u) == 0.0);
        CHECK(cross_z(u, v) == -cross_z(v, u));
    }
}

TEST_CASE("cross3 of the basis vectors") {
    const Vec3 k = cross3({1, 0, 0}, {0, 1, 0});
    CHECK(k.x == 0.0);
    CHECK(k.y == 0.0);
    CHECK(k.z == 1.0);
}

TEST_CASE("cross3 of a vector with itself vanishes") {
    const Vec3 u{0.3, -1.7, 2.9};
    const Vec3 c = cross3(u, u);
    CHECK(c.x == 0.0);
    CHECK(c.y == 0.0);
    CHECK(c.z == 0.0);
}

TEST_CASE("cross3 example with orthogonality and norm identity") {
    const Vec3 u{1, 2, 3};
    const Vec3 v{4, 5, 6};
    const Vec3 c = cross3(u, v);
    CHECK(c.x == -3.0);
    CHECK(c.y == 6.0);
    CHECK(c.z == -3.0);
    CHECK(dot(u, c) == 0.0);
    CHECK(dot(v, c) == 0.0);
    CHECK(norm_sq(c) ==
          doctest::Approx(norm_sq(u) * norm_sq(v) - dot(u, v) * dot(u, v)).epsilon(1e-12));
}

TEST_CASE("cross3 Lagrange identity and orthogonality on random unit vectors") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        Vec3 u{coord(rng), coord(rng), coord(rng)};
        Vec3 v{coord(rng), coord(rng), coord(rng)};
        if (norm(u) < 1e-2 || norm(v) < 1e-2) {
            continue;
        }
        u = (1.0 / norm(u)) * u;
        v = (1.0 / norm(v)) * v;
        const Vec3 c = cross3(u, v);
        const double identity = norm_sq(u) * norm_sq(v) - dot(u, v) * dot(u, v);
        if (identity > 1e-6) {
            CHECK(norm_sq(c) == doctest::Approx(identity).epsilon(1e-10));
        }
        CHECK(std::abs(dot(u, c)) <= 1e-12);
        CHECK(std::abs(dot(v, c)) <= 1e-12);
    }
}
