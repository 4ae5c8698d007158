#pragma once

#include "kepler/dynamics.hpp"
#include "kepler/vec.hpp"

namespace kepler::analytic {

using geom::Vec2;

/// Angular density Theta(theta) = 1 / (1 - eps cos theta)^2. Its integral
/// over [0, theta] measures the time (up to the constant factor p^2 / C)
/// the planet needs to sweep from the apoapsis to angle theta.
double theta_density(double theta, double eps);

/// Angular velocity along the conic: theta' = (C / p^2) (1 - eps cos theta)^2.
/// Slowest at the apoapsis (theta = 0), fastest at the periapsis (theta = pi).
double theta_rate(double theta, double eps, double C, double p);

/// Closed-form antiderivative of theta_density on the principal arctan
/// branch:
///
///   I(theta) = 2 / (1 - eps^2)^{3/2} * (atan(z) + eps z / (z^2 + 1)),
///   z = sqrt((1 + eps) / (1 - eps)) * tan(theta / 2).
///
/// 2 pi - periodic in theta, with a jump of one full period at the poles of
/// tan(theta/2); antiderivative_continuous repairs the branches. Throws
/// std::domain_error at odd multiples of pi.
double antiderivative_raw(double theta, double eps);

/// Branch-continuous antiderivative: equals antiderivative_raw on (-pi, pi),
/// is extended by I(theta + 2 pi) = I(theta) + I_period, and fills the poles
/// with their one-sided limit. Strictly increasing, I(0) = 0.
double antiderivative_continuous(double theta, double eps);

/// Independent check of the closed form: adaptive-Simpson value of
/// int_0^theta dx / (1 - eps cos x)^2 to 1e-11 absolute.
double quadrature_oracle(double theta, double eps);

/// The time law t(theta) of motion along the ellipse: t = I(theta) / rate
/// with rate = C / p^2, normalized so that t(0) = 0 at the apoapsis.
class TimeLaw {
public:
    TimeLaw(double eps, double rate);

    /// rate = |C| / p^2 of the orbit.
    static TimeLaw from_elements(const dynamics::OrbitElements& elements);

    double eps() const { return eps_; }
    double rate() const { return rate_; }
    /// Cached full-revolution integral I(2 pi) = 2 pi / (1 - eps^2)^{3/2}.
    double period_integral() const { return period_integral_; }
    /// Orbital period T = period_integral / rate.
    double period() const { return period_integral_ / rate_; }

private:
    double eps_;
    double rate_;
    double period_integral_;
};

/// Strictly increasing in theta; t(0) = 0, t(2 pi) = T.
double time_from_angle(double theta, const TimeLaw& law);

/// Inverse of time_from_angle (Newton with a bisection safeguard on the
/// strictly increasing antiderivative). Total map R -> R.
double angle_from_time(double t, const TimeLaw& law);

/// Speed along the orbit as a function of the polar angle,
///
///   |v| = scale * (1 - eps cos theta) * sqrt((eps sin theta / (1 - eps cos theta))^2 + 1),
///
/// with scale = C / p. Minimal at the apoapsis, maximal at the periapsis;
/// the apsidal ratio is (1 + eps) / (1 - eps).
class SpeedProfile {
public:
    SpeedProfile(double eps, double scale);

    static SpeedProfile from_elements(const dynamics::OrbitElements& elements);

    double eps() const { return eps_; }
    double scale() const { return scale_; }

private:
    double eps_;
    double scale_;
};

double speed_from_angle(double theta, const SpeedProfile& profile);

/// Squared speed through the u = 1/r substitution,
/// v^2 = C^2 [(du/dtheta)^2 + u^2]; an algebraic cross-check of
/// speed_from_angle (they must agree to 1e-10 relative).
double speed_u_form_check(double theta, const dynamics::OrbitElements& elements);

/// Acceleration at polar angle theta: magnitude C^2 / (p r^2) = mu / r^2,
/// directed from the planet to the focus at the origin. theta is measured in
/// the orbit-aligned frame (apoapsis at theta = 0).
Vec2 acceleration_from_angle(double theta, const dynamics::OrbitElements& elements);

}  // namespace kepler::analytic
