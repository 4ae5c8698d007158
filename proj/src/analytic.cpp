#include "kepler/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kepler/ellipse.hpp"
#include "kepler/quadrature.hpp"

namespace kepler::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_eps(double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw std::domain_error("eps must be in [0, 1)");
    }
}

/// I(2 pi): twice the one-sided limit of the closed form at theta -> pi-,
/// where atan(z) -> pi/2 and the eps z / (z^2 + 1) term vanishes.
double full_revolution(double eps) {
    return kTwoPi / std::pow((1.0 - eps) * (1.0 + eps), 1.5);
}

/// Principal-branch closed form; 2 pi - periodic in theta. Accurate right up
/// to the poles of tan(theta/2), where it attains the one-sided limit.
double raw_branch(double theta, double eps) {
    const double stretch = std::sqrt((1.0 + eps) / (1.0 - eps));
    const double z = stretch * std::tan(0.5 * theta);
    const double prefactor = 2.0 / std::pow((1.0 - eps) * (1.0 + eps), 1.5);
    return prefactor * (std::atan(z) + eps * z / (z * z + 1.0));
}

}  // namespace

double theta_density(double theta, double eps) {
    require_eps(eps);
    const double d = 1.0 - eps * std::cos(theta);
    return 1.0 / (d * d);
}

double theta_rate(double theta, double eps, double C, double p) {
    require_eps(eps);
    if (!(p > 0.0)) {
        throw std::domain_error("theta_rate: p must be positive");
    }
    const double d = 1.0 - eps * std::cos(theta);
    return C / (p * p) * d * d;
}

double antiderivative_raw(double theta, double eps) {
    require_eps(eps);
    if (std::abs(std::remainder(theta - kPi, kTwoPi)) < 1e-12) {
        throw std::domain_error(
            "antiderivative_raw: pole of tan(theta/2) at an odd multiple of pi");
    }
    return raw_branch(theta, eps);
}

double antiderivative_continuous(double theta, double eps) {
    require_eps(eps);
    if (eps == 0.0) {
        return theta;  // Theta == 1
    }
    const double n = std::round(theta / kTwoPi);
    const double reduced = theta - n * kTwoPi;  // in [-pi, pi]
    return raw_branch(reduced, eps) + n * full_revolution(eps);
}

double quadrature_oracle(double theta, double eps) {
    require_eps(eps);
    const auto density = [eps](double x) {
        const double d = 1.0 - eps * std::cos(x);
        return 1.0 / (d * d);
    };
    return quad::integrate(density, 0.0, theta, 1e-11);
}

TimeLaw::TimeLaw(double eps, double rate)
    : eps_(eps), rate_(rate), period_integral_(0.0) {
    require_eps(eps);
    if (!(rate > 0.0)) {
        throw std::domain_error("TimeLaw: rate must be positive");
    }
    period_integral_ = full_revolution(eps);
}

TimeLaw TimeLaw::from_elements(const dynamics::OrbitElements& elements) {
    return TimeLaw(elements.eps, std::abs(elements.C) / (elements.p * elements.p));
}

double time_from_angle(double theta, const TimeLaw& law) {
    return antiderivative_continuous(theta, law.eps()) / law.rate();
}

double angle_from_time(double t, const TimeLaw& law) {
    const double target = t * law.rate();
    const double revolution = law.period_integral();
    const double n = std::floor(target / revolution);
    const double level = target - n * revolution;  // in [0, revolution)

    // Newton on I(theta) = level over [0, 2 pi], bisection-boxed. I' = Theta
    // is bounded below by 1/(1+eps)^2 > 1/4, so the iteration is safe; the
    // bracket only shrinks.
    double lo = 0.0;
    double hi = kTwoPi;
    double theta = kTwoPi * level / revolution;
    for (int i = 0; i < 200; ++i) {
        const double f = antiderivative_continuous(theta, law.eps()) - level;
        if (f > 0.0) {
            hi = theta;
        } else {
            lo = theta;
        }
        double next = theta - f / theta_density(theta, law.eps());
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - theta) <= 1e-15 * std::max(1.0, std::abs(theta))) {
            theta = next;
            break;
        }
        theta = next;
    }
    return theta + n * kTwoPi;
}

SpeedProfile::SpeedProfile(double eps, double scale) : eps_(eps), scale_(scale) {
    require_eps(eps);
    if (!(scale > 0.0)) {
        throw std::domain_error("SpeedProfile: scale must be positive");
    }
}

SpeedProfile SpeedProfile::from_elements(const dynamics::OrbitElements& elements) {
    return SpeedProfile(elements.eps, std::abs(elements.C) / elements.p);
}

double speed_from_angle(double theta, const SpeedProfile& profile) {
    const double eps = profile.eps();
    const double d = 1.0 - eps * std::cos(theta);
    const double radial = eps * std::sin(theta) / d;
    return profile.scale() * d * std::sqrt(radial * radial + 1.0);
}

double speed_u_form_check(double theta, const dynamics::OrbitElements& elements) {
    const double u = (1.0 - elements.eps * std::cos(theta)) / elements.p;
    const double du_dtheta = elements.eps * std::sin(theta) / elements.p;
    return elements.C * elements.C * (du_dtheta * du_dtheta + u * u);
}

Vec2 acceleration_from_angle(double theta, const dynamics::OrbitElements& elements) {
    const double r = geom::polar_radius(elements.p, elements.eps, theta);
    const double mag = elements.C * elements.C / (elements.p * r * r);
    return {-mag * std::cos(theta), -mag * std::sin(theta)};
}

}  // namespace kepler::analytic
