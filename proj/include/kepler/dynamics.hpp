#pragma once

#include <vector>

#include "kepler/vec.hpp"

namespace kepler::dynamics {

using geom::Vec3;

/// Instantaneous state of the planet, with the Sun fixed at the origin.
struct BodyState {
    Vec3 pos;
    Vec3 vel;
    double t = 0.0;
};

/// The conserved quantities of the inverse-square field: the angular-momentum
/// components (A, B, C) = pos x vel that define the orbital plane
/// A x + B y + C z = 0, and the energy constant h = |vel|^2 - 2 mu / |pos|
/// (negative for bound orbits).
struct FirstIntegrals {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double h = 0.0;
    double mu = 0.0;
};

/// Dynamical description of a bound orbit, r = p / (1 - eps cos(theta - k)).
struct OrbitElements {
    double p;    // semi-latus rectum, p = C^2 / mu
    double eps;  // eccentricity, eps = sqrt(1 + C^2 h / mu^2) < 1 when bound
    double k;    // phase offset of the apsides, normalized to (-pi, pi]
    double mu;   // gravitational parameter
    double C;    // in-plane areal constant x*vy - y*vx (signed)
    double h;    // energy constant, < 0 for bound orbits
    int sense;   // +1 counter-clockwise, -1 clockwise
};

/// Uniformly sampled propagation output; states[i].t = t0 + i * dt.
struct Trajectory {
    std::vector<BodyState> states;
    double dt = 0.0;
};

/// Inverse-square acceleration -(mu / r^2) * (pos / |pos|), directed at the
/// origin. Throws SingularityError when |pos| < 1e-12.
Vec3 gravity_accel(const Vec3& pos, double mu);

/// One classical 4th-order Runge-Kutta step of the coupled (pos, vel) system.
BodyState rk4_step(const BodyState& state, double mu, double dt);

/// steps RK4 steps from state0; returns the steps+1 visited states.
Trajectory propagate(const BodyState& state0, double mu, double dt, int steps);

FirstIntegrals first_integrals(const BodyState& state, double mu);

/// max over states of |A x + B y + C z| / (|(A,B,C)| * |pos|): how far the
/// trajectory strays from its orbital plane. Throws DegenerateOrbitError when
/// (A, B, C) = 0.
double plane_residual(const Trajectory& traj, const FirstIntegrals& fi);

/// Recovers the conic elements from a single state. States outside the
/// XY-plane are first rotated by the minimal rotation taking (A, B, C) onto
/// +z; the rotation depends only on the conserved plane constants, so every
/// state of a trajectory yields the same elements. Throws UnboundOrbitError
/// for h >= 0 and DegenerateOrbitError for radial motion.
OrbitElements elements_from_state(const BodyState& state, double mu);

/// Orbital period from the swept-area rate: the radius vector sweeps
/// |C| / 2 per unit time, so T = 2 pi a b / |C|.
double period(const OrbitElements& elements);

}  // namespace kepler::dynamics
