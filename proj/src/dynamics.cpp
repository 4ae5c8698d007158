#include "kepler/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kepler/ellipse.hpp"
#include "kepler/errors.hpp"

namespace kepler::dynamics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Rotate w by the minimal rotation that takes the unit vector axis_from
/// onto axis_to (Rodrigues form). Assumes the two are not anti-parallel.
Vec3 rotate_between(const Vec3& w, const Vec3& axis_from, const Vec3& axis_to) {
    const Vec3 u = cross3(axis_from, axis_to);
    const double sin_a = norm(u);
    const double cos_a = dot(axis_from, axis_to);
    if (sin_a == 0.0) {
        return w;
    }
    const Vec3 un = (1.0 / sin_a) * u;
    return cos_a * w + sin_a * cross3(un, w) + ((1.0 - cos_a) * dot(un, w)) * un;
}

}  // namespace

Vec3 gravity_accel(const Vec3& pos, double mu) {
    if (!(mu > 0.0)) {
        throw std::domain_error("gravity_accel: mu must be positive");
    }
    const double r = norm(pos);
    if (r < 1e-12) {
        throw SingularityError("gravity_accel: |pos| < 1e-12, singular at the origin");
    }
    return (-mu / (r * r * r)) * pos;
}

BodyState rk4_step(const BodyState& state, double mu, double dt) {
    if (!(dt > 0.0)) {
        throw std::domain_error("rk4_step: dt must be positive");
    }
    const Vec3 p0 = state.pos;
    const Vec3 v0 = state.vel;

    const Vec3 k1p = v0;
    const Vec3 k1v = gravity_accel(p0, mu);
    const Vec3 k2p = v0 + (0.5 * dt) * k1v;
    const Vec3 k2v = gravity_accel(p0 + (0.5 * dt) * k1p, mu);
    const Vec3 k3p = v0 + (0.5 * dt) * k2v;
    const Vec3 k3v = gravity_accel(p0 + (0.5 * dt) * k2p, mu);
    const Vec3 k4p = v0 + dt * k3v;
    const Vec3 k4v = gravity_accel(p0 + dt * k3p, mu);

    BodyState next;
    next.pos = p0 + (dt / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    next.vel = v0 + (dt / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    next.t = state.t + dt;
    return next;
}

Trajectory propagate(const BodyState& state0, double mu, double dt, int steps) {
    if (steps < 1) {
        throw std::domain_error("propagate: steps must be >= 1");
    }
    Trajectory traj;
    traj.dt = dt;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.push_back(state0);
    BodyState s = state0;
    for (int i = 0; i < steps; ++i) {
        s = rk4_step(s, mu, dt);
        s.t = state0.t + (i + 1) * dt;  // uniform grid, no accumulation drift
        traj.states.push_back(s);
    }
    return traj;
}

FirstIntegrals first_integrals(const BodyState& state, double mu) {
    const Vec3 n = cross3(state.pos, state.vel);
    const double r = norm(state.pos);
    FirstIntegrals fi;
    fi.A = n.x;
    fi.B = n.y;
    fi.C = n.z;
    fi.h = norm_sq(state.vel) - 2.0 * mu / r;
    fi.mu = mu;
    return fi;
}

double plane_residual(const Trajectory& traj, const FirstIntegrals& fi) {
    if (traj.states.empty()) {
        throw std::invalid_argument("plane_residual: empty trajectory");
    }
    const double n = std::sqrt(fi.A * fi.A + fi.B * fi.B + fi.C * fi.C);
    const BodyState& s0 = traj.states.front();
    const double scale = norm(s0.pos) * norm(s0.vel);
    if (n <= 1e-15 * scale) {
        throw DegenerateOrbitError("plane_residual: (A, B, C) = 0, radial orbit has no plane");
    }
    double worst = 0.0;
    for (const BodyState& s : traj.states) {
        const double res =
            std::abs(fi.A * s.pos.x + fi.B * s.pos.y + fi.C * s.pos.z) / (n * norm(s.pos));
        worst = std::max(worst, res);
    }
    return worst;
}

OrbitElements elements_from_state(const BodyState& state, double mu) {
    const FirstIntegrals fi = first_integrals(state, mu);
    const Vec3 n{fi.A, fi.B, fi.C};
    const double n_norm = norm(n);
    const double scale = norm(state.pos) * norm(state.vel);
    if (n_norm <= 1e-12 * scale) {
        throw DegenerateOrbitError(
            "elements_from_state: zero areal constant (radial orbit)");
    }

    // Work in a frame whose XY-plane is the orbital plane. States already in
    // the XY-plane keep their frame and the sign of C; tilted states are
    // rotated so that (A, B, C) points along +z, making the motion
    // counter-clockwise in the rotated frame.
    double x, y, vx, vy, c_in;
    if (std::hypot(fi.A, fi.B) <= 1e-12 * n_norm) {
        x = state.pos.x;
        y = state.pos.y;
        vx = state.vel.x;
        vy = state.vel.y;
        c_in = fi.C;
    } else {
        const Vec3 n_hat = (1.0 / n_norm) * n;
        const Vec3 z_hat{0.0, 0.0, 1.0};
        const Vec3 rp = rotate_between(state.pos, n_hat, z_hat);
        const Vec3 rv = rotate_between(state.vel, n_hat, z_hat);
        x = rp.x;
        y = rp.y;
        vx = rv.x;
        vy = rv.y;
        c_in = n_norm;
    }

    const double p = c_in * c_in / mu;
    const double eps_sq = 1.0 + p * fi.h / mu;  // = 1 + C^2 h / mu^2
    if (eps_sq >= 1.0) {
        throw UnboundOrbitError(
            "elements_from_state: non-negative energy, orbit is not bound");
    }
    const double eps = std::sqrt(std::max(0.0, eps_sq));

    // Phase offset from the current polar angle. cos(theta - k) follows from
    // the conic equation; the sign of sin(theta - k) from the radial velocity
    // (r' = -(eps C / p) sin(theta - k)), which also breaks the tie at the
    // apsides.
    double k = 0.0;
    if (eps > 1e-12) {
        const double r = std::hypot(x, y);
        const double theta = std::atan2(y, x);
        const double cos_v = (1.0 - p / r) / eps;
        const double r_dot = (x * vx + y * vy) / r;
        const double sin_v = -r_dot * p / (eps * c_in);
        k = std::remainder(theta - std::atan2(sin_v, cos_v), kTwoPi);
    }

    OrbitElements el;
    el.p = p;
    el.eps = eps;
    el.k = k;
    el.mu = mu;
    el.C = c_in;
    el.h = fi.h;
    el.sense = c_in > 0.0 ? +1 : -1;
    return el;
}

double period(const OrbitElements& elements) {
    const geom::EllipseGeometry g = geom::ellipse_from_conic(elements.p, elements.eps);
    return kTwoPi * g.a * g.b / std::abs(elements.C);
}

}  // namespace kepler::dynamics
