#include <doctest.h>

#include <numbers>
#include <set>
#include <string>

#include "kepler/analytic.hpp"
#include "kepler/planets.hpp"

using namespace kepler::solar;

TEST_CASE("the table holds the eight planets in Sun order") {
    const auto& planets = load_planets();
    REQUIRE(planets.size() == 8);
    CHECK(planets[0].name == "Mercury");
    CHECK(planets[1].name == "Venus");
    CHECK(planets[2].name == "Earth");
    CHECK(planets[3].name == "Mars");
    CHECK(planets[4].name == "Jupiter");
    CHECK(planets[5].name == "Saturn");
    CHECK(planets[6].name == "Uranus");
    CHECK(planets[7].name == "Neptune");
    std::set<std::string> names;
    for (const auto& p : planets) {
        names.emplace(p.name);
    }
    CHECK(names.size() == 8);
}

TEST_CASE("tabulated eccentricities") {
    const auto& planets = load_planets();
    CHECK(planets[0].eps == 0.20563069);
    CHECK(planets[2].eps == 0.01671022);
    CHECK(planets[7].eps == 0.00858587);
}

TEST_CASE("eccentricity bounds: all below 0.21, all but Mercury below 0.1") {
    for (const auto& p : load_planets()) {
        CHECK(p.eps < 0.21);
        CHECK(p.eps >= 0.0);
        if (p.name != "Mercury") {
            CHECK(p.eps < 0.1);
        }
    }
}

TEST_CASE("speed ratios of Venus and Mercury") {
    const auto& planets = load_planets();
    CHECK(planet_speed_ratio(planets[1]) == doctest::Approx(1.01364).epsilon(1e-5));
    CHECK(planet_speed_ratio(planets[0]) == doctest::Approx(1.51772).epsilon(1e-5));
    CHECK(planet_speed_ratio({"circular", 0.0}) == 1.0);
}

TEST_CASE("speed ratio equals the apsidal speed quotient of the profile") {
    constexpr double pi = std::numbers::pi;
    for (const auto& p : load_planets()) {
        const kepler::analytic::SpeedProfile profile(p.eps, 1.0);
        const double ratio = kepler::analytic::speed_from_angle(pi, profile) /
                             kepler::analytic::speed_from_angle(0.0, profile);
        CHECK(planet_speed_ratio(p) == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("speed ratio grows with eccentricity across the table") {
    const auto& planets = load_planets();
    for (std::size_t i = 0; i < planets.size(); ++i) {
        for (std::size_t j = 0; j < planets.size(); ++j) {
            if (planets[i].eps < planets[j].eps) {
                CHECK(planet_speed_ratio(planets[i]) < planet_speed_ratio(planets[j]));
            }
        }
    }
}
