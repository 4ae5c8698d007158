#include "kepler/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "kepler/analytic.hpp"
#include "kepler/curvature.hpp"
#include "kepler/dynamics.hpp"
#include "kepler/ellipse.hpp"
#include "kepler/planets.hpp"
#include "kepler/vec.hpp"

namespace kepler::checks {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using geom::Vec2;
using geom::Vec3;
using dynamics::BodyState;
using dynamics::FirstIntegrals;
using dynamics::OrbitElements;
using dynamics::Trajectory;

double rel(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

/// Start state at the apoapsis of an (a, eps) orbit in the XY-plane,
/// counter-clockwise: r = a (1 + eps), speed from the energy relation.
BodyState apoapsis_state(double a, double eps, double mu) {
    const double r = a * (1.0 + eps);
    const double v = std::sqrt(mu * (2.0 / r - 1.0 / a));
    return {{r, 0.0, 0.0}, {0.0, v, 0.0}, 0.0};
}

/// Signed in-plane angle between consecutive position vectors.
double angle_step(const Vec3& prev, const Vec3& cur) {
    return std::atan2(prev.x * cur.y - prev.y * cur.x, prev.x * cur.x + prev.y * cur.y);
}

/// Time of the first full revolution, measured by unwrapping the polar angle
/// along a propagated orbit and refining the 2 pi crossing with bisection on
/// a single RK4 substep.
double measure_period(const BodyState& s0, double mu, double period_hint) {
    const double dt = 1e-4 * period_hint;
    BodyState prev = s0;
    double swept = 0.0;
    for (int i = 0; i < 20000; ++i) {
        BodyState next = dynamics::rk4_step(prev, mu, dt);
        const double d = angle_step(prev.pos, next.pos);
        if (swept + d >= kTwoPi) {
            double lo = 0.0, hi = dt;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const BodyState probe = dynamics::rk4_step(prev, mu, mid);
                (swept + angle_step(prev.pos, probe.pos) >= kTwoPi ? hi : lo) = mid;
            }
            return prev.t + 0.5 * (lo + hi);
        }
        swept += d;
        prev = next;
    }
    return -1.0;  // never wrapped: let the caller fail the check
}

struct Recorder {
    std::vector<CheckResult> results;

    void add(std::string name, double worst, double tol) {
        results.push_back({std::move(name), worst, tol, worst <= tol});
    }
};

void check_geometry(Recorder& rec, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> axis(0.1, 10.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    // b/a >= 0.15 keeps eps within the supported range (<= 0.99); nearer the
    // degenerate segment the 1 - eps^2 reconstruction loses digits.
    std::uniform_real_distribution<double> ratio(0.15, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = axis(rng);
        const double b = a * ratio(rng);
        const auto g = geom::ellipse_from_axes(a, b);
        const auto back = geom::ellipse_from_conic(g.p, g.eps);
        worst = std::max({worst, rel(back.a, a), rel(back.b, b)});
    }
    rec.add("ellipse round-trip", worst, 1e-12);

    worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Vec2 u{unit(rng), unit(rng)};
        const Vec2 v{unit(rng), unit(rng)};
        const Vec2 w{unit(rng), unit(rng)};
        const double alpha = 3.0 * unit(rng);
        const double beta = 3.0 * unit(rng);
        const double lhs = cross_z(alpha * u + beta * w, v);
        const double rhs = alpha * cross_z(u, v) + beta * cross_z(w, v);
        worst = std::max(worst, std::abs(lhs - rhs));
        worst = std::max(worst, std::abs(cross_z(u, u)));
    }
    rec.add("planar product bilinearity", worst, 1e-12);

    double worst_lagrange = 0.0;
    double worst_ortho = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec3 u{unit(rng), unit(rng), unit(rng)};
        Vec3 v{unit(rng), unit(rng), unit(rng)};
        u = (1.0 / std::max(norm(u), 1e-3)) * u;
        v = (1.0 / std::max(norm(v), 1e-3)) * v;
        const Vec3 c = cross3(u, v);
        const double identity = norm_sq(u) * norm_sq(v) - dot(u, v) * dot(u, v);
        if (identity > 1e-6) {
            worst_lagrange = std::max(worst_lagrange, rel(norm_sq(c), identity));
        }
        worst_ortho = std::max({worst_ortho, std::abs(dot(u, c)), std::abs(dot(v, c))});
    }
    rec.add("vector product Lagrange identity", worst_lagrange, 1e-10);
    rec.add("vector product orthogonality", worst_ortho, 1e-12);

    worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double a = axis(rng);
        const double b = std::min(a, axis(rng));
        const auto g = geom::ellipse_from_axes(a, b);
        for (int j = 0; j < 360; ++j) {
            const double theta = kTwoPi * j / 360.0;
            const Vec2 pt = geom::polar_to_cartesian(geom::polar_radius(g.p, g.eps, theta), theta);
            // The polar origin is a focus; shift so that it lands on (-f, 0).
            const Vec2 canonical{pt.x - g.f, pt.y};
            const double sum = norm(canonical - Vec2{-g.f, 0.0}) + norm(canonical - Vec2{g.f, 0.0});
            worst = std::max(worst, rel(sum, 2.0 * g.a));
        }
    }
    rec.add("focal distance sum", worst, 1e-9);

    worst = 0.0;
    std::uniform_real_distribution<double> rate_dist(0.1, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double radius = axis(rng);
        const double omega = rate_dist(rng);
        const double phase = kPi * unit(rng);
        const Vec2 v{-omega * radius * std::sin(phase), omega * radius * std::cos(phase)};
        const Vec2 acc{-omega * omega * radius * std::cos(phase),
                       -omega * omega * radius * std::sin(phase)};
        worst = std::max(worst, rel(geom::curvature_radius(v, acc), radius));
    }
    rec.add("circular curvature radius", worst, 1e-12);
}

void check_dynamics(Recorder& rec, std::mt19937_64& rng) {
    const double mu = 1.0;
    const BodyState s0 = apoapsis_state(5.0, 0.8, mu);
    const OrbitElements el = dynamics::elements_from_state(s0, mu);
    const double T = dynamics::period(el);
    const Trajectory traj = dynamics::propagate(s0, mu, 1e-4 * T, 10000);
    const FirstIntegrals fi0 = dynamics::first_integrals(s0, mu);
    const double n0 = std::sqrt(fi0.A * fi0.A + fi0.B * fi0.B + fi0.C * fi0.C);

    double worst_drift = 0.0;
    double worst_kepler1 = 0.0;
    double worst_kepler2 = 0.0;
    for (const BodyState& s : traj.states) {
        const FirstIntegrals fi = dynamics::first_integrals(s, mu);
        worst_drift = std::max({worst_drift, std::abs(fi.A - fi0.A) / n0,
                                std::abs(fi.B - fi0.B) / n0, std::abs(fi.C - fi0.C) / n0,
                                std::abs(fi.h - fi0.h) / std::abs(fi0.h)});
        const double theta = std::atan2(s.pos.y, s.pos.x);
        const double r_conic = geom::polar_radius(el.p, el.eps, theta - el.k);
        worst_kepler1 = std::max(worst_kepler1, rel(norm(s.pos), r_conic));
        const double areal = s.pos.x * s.vel.y - s.pos.y * s.vel.x;
        worst_kepler2 = std::max(worst_kepler2, rel(areal, fi0.C));
    }
    rec.add("first-integral conservation", worst_drift, 1e-6);
    rec.add("Kepler I: conic radius law", worst_kepler1, 1e-5);
    rec.add("Kepler II: areal constancy", worst_kepler2, 1e-6);

    // Arbitrary tilted initial conditions stay in their plane.
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst_plane = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double tilt = angle(rng);
        const BodyState flat = apoapsis_state(2.0, 0.5, mu);
        const BodyState tilted{{flat.pos.x, flat.pos.y * std::cos(tilt), flat.pos.y * std::sin(tilt)},
                               {flat.vel.x, flat.vel.y * std::cos(tilt), flat.vel.y * std::sin(tilt)},
                               0.0};
        const double Tt = dynamics::period(dynamics::elements_from_state(tilted, mu));
        const Trajectory tr = dynamics::propagate(tilted, mu, 1e-4 * Tt, 10000);
        worst_plane = std::max(worst_plane,
                               dynamics::plane_residual(tr, dynamics::first_integrals(tilted, mu)));
    }
    rec.add("orbital planarity", worst_plane, 1e-8);

    // Third law: a^3 / T^2 is one constant, mu / (4 pi^2), with the period
    // measured from the propagated motion itself.
    const double semi_axes[] = {1.0, 2.5, 5.0};
    const double eccs[] = {0.2, 0.5, 0.8};
    double ratios[3] = {};
    for (int i = 0; i < 3; ++i) {
        const BodyState s = apoapsis_state(semi_axes[i], eccs[i], mu);
        const OrbitElements e = dynamics::elements_from_state(s, mu);
        const double a = geom::ellipse_from_conic(e.p, e.eps).a;
        const double t_meas = measure_period(s, mu, dynamics::period(e));
        ratios[i] = a * a * a / (t_meas * t_meas);
    }
    const double expected = mu / (4.0 * kPi * kPi);
    double worst_third = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst_third = std::max(worst_third, rel(ratios[i], expected));
        for (int j = i + 1; j < 3; ++j) {
            worst_third = std::max(worst_third, rel(ratios[i], ratios[j]));
        }
    }
    rec.add("Kepler III: a^3/T^2 constant", worst_third, 1e-6);

    // p = C^2 / mu by construction, so the conic acceleration C^2 / (p r^2)
    // is exactly the inverse-square mu / r^2.
    rec.add("inverse-square identity", rel(el.C * el.C / el.p, mu), 1e-14);
}

void check_analytic(Recorder& rec, std::mt19937_64& rng, const std::vector<double>& eps_grid) {
    std::uniform_real_distribution<double> wide_theta(-10.0 * kPi, 10.0 * kPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, eps_grid.size() - 1);

    // d/dtheta of the repaired antiderivative is the density.
    double worst = 0.0;
    const double delta = 1e-6;
    for (int i = 0; i < 500; ++i) {
        const double eps = eps_grid[pick(rng)];
        // Every fourth sample lands near the pole at pi.
        const double theta =
            (i % 4 == 0) ? kPi + 0.01 * (unit(rng) - 0.5) : wide_theta(rng);
        const double fd = (analytic::antiderivative_continuous(theta + delta, eps) -
                           analytic::antiderivative_continuous(theta - delta, eps)) /
                          (2.0 * delta);
        worst = std::max(worst, std::abs(fd - analytic::theta_density(theta, eps)));
    }
    rec.add("fundamental theorem of calculus", worst, 1e-6);

    worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double eps = eps_grid[pick(rng)];
        const double theta = wide_theta(rng);
        worst = std::max(worst, std::abs(analytic::antiderivative_continuous(theta, eps) -
                                         analytic::quadrature_oracle(theta, eps)));
    }
    rec.add("closed form vs quadrature", worst, 1e-8);

    worst = 0.0;
    double worst_rev = 0.0;
    for (const double eps : eps_grid) {
        const analytic::TimeLaw law(eps, 1.0);
        for (int i = 0; i <= 100; ++i) {
            const double theta = 4.0 * kPi * i / 100.0;
            const double back = analytic::angle_from_time(analytic::time_from_angle(theta, law), law);
            worst = std::max(worst, std::abs(back - theta));
        }
        for (int i = 0; i < 50; ++i) {
            const double theta = wide_theta(rng);
            const double inc = analytic::antiderivative_continuous(theta + kTwoPi, eps) -
                               analytic::antiderivative_continuous(theta, eps);
            worst_rev = std::max(worst_rev, rel(inc, law.period_integral()));
        }
    }
    rec.add("time-law inversion", worst, 1e-9);
    rec.add("revolution increment constancy", worst_rev, 1e-10);

    worst = 0.0;
    for (const double eps : eps_grid) {
        if (eps == 0.0) {
            continue;
        }
        const analytic::SpeedProfile profile(eps, 1.0);
        const double ratio =
            analytic::speed_from_angle(kPi, profile) / analytic::speed_from_angle(0.0, profile);
        worst = std::max(worst, std::abs(ratio - (1.0 + eps) / (1.0 - eps)));
    }
    rec.add("apsidal speed ratio", worst, 1e-10);

    worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double eps = eps_grid[pick(rng)];
        const double theta = wide_theta(rng);
        const double p = 0.5 + 2.0 * unit(rng);
        const double mu = 0.5 + unit(rng);
        const double c = std::sqrt(mu * p);
        const OrbitElements el{p, eps, 0.0, mu, c, (eps * eps - 1.0) * mu / p, +1};
        const double v = analytic::speed_from_angle(theta, analytic::SpeedProfile::from_elements(el));
        worst = std::max(worst, rel(analytic::speed_u_form_check(theta, el), v * v));
    }
    rec.add("speed u-form equivalence", worst, 1e-10);

    // Matched dynamics run: the time law reproduces the propagated angle and
    // the speed profile the vis-viva speed.
    const double mu = 1.0;
    const BodyState s0 = apoapsis_state(5.0, 0.8, mu);
    const OrbitElements el = dynamics::elements_from_state(s0, mu);
    const analytic::TimeLaw law = analytic::TimeLaw::from_elements(el);
    const analytic::SpeedProfile profile = analytic::SpeedProfile::from_elements(el);
    const double T = dynamics::period(el);
    const Trajectory traj = dynamics::propagate(s0, mu, 1e-5 * T, 100000);
    double worst_angle = 0.0;
    double worst_speed = 0.0;
    double swept = 0.0;
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const BodyState& s = traj.states[i];
        if (i > 0) {
            swept += angle_step(traj.states[i - 1].pos, s.pos);
        }
        worst_angle = std::max(worst_angle,
                               std::abs(analytic::angle_from_time(s.t, law) - swept));
        const double vis_viva = std::sqrt(el.h + 2.0 * mu / norm(s.pos));
        worst_speed = std::max(worst_speed,
                               rel(analytic::speed_from_angle(swept, profile), vis_viva));
    }
    rec.add("time law vs propagated angle", worst_angle, 1e-4);
    rec.add("speed profile vs vis-viva", worst_speed, 1e-6);
}

void check_planets(Recorder& rec) {
    const auto& planets = solar::load_planets();
    double worst_other = 0.0;
    for (const auto& p : planets) {
        if (p.name != "Mercury") {
            worst_other = std::max(worst_other, p.eps);
        }
    }
    rec.add("non-Mercury eccentricities below 0.1", worst_other, 0.1);

    // Speed ratio grows with eccentricity across the table.
    std::array<solar::PlanetRecord, 8> by_eps = planets;
    std::sort(by_eps.begin(), by_eps.end(),
              [](const auto& a, const auto& b) { return a.eps < b.eps; });
    double worst_violation = -1.0;
    for (std::size_t i = 1; i < by_eps.size(); ++i) {
        worst_violation = std::max(worst_violation, solar::planet_speed_ratio(by_eps[i - 1]) -
                                                        solar::planet_speed_ratio(by_eps[i]));
    }
    rec.add("speed ratio monotone in eps", worst_violation, 0.0);
}

}  // namespace

std::vector<CheckResult> run_all(const CheckOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    Recorder rec;
    check_geometry(rec, rng);
    check_dynamics(rec, rng);
    check_analytic(rec, rng, opts.eps_grid);
    check_planets(rec);
    if (opts.fail_inject && !rec.results.empty()) {
        rec.results.front().worst = 10.0 * rec.results.front().tol + 1.0;
        rec.results.front().pass = false;
        rec.results.front().name += " [injected fault]";
    }
    return rec.results;
}

}  // namespace kepler::checks
