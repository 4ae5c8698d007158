#pragma once

#include <cmath>

namespace kepler::quad {

namespace detail {

template <class F>
double adapt(F& f, double a, double fa, double m, double fm, double b, double fb,
             double whole, double tol, int depth, int forced) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || (forced <= 0 && std::abs(delta) <= 15.0 * tol)) {
        return left + right + delta / 15.0;  // Richardson correction
    }
    return adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1, forced - 1) +
           adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1, forced - 1);
}

template <class F>
double adapt_panel(F& f, double a, double b, double tol, int max_depth, int forced) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adapt(f, a, fa, m, fm, b, fb, whole, tol, max_depth, forced);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to the given absolute
/// tolerance. Signed: swapping a and b negates the result.
///
/// Two guards against a deceived error estimate: the range is first cut into
/// panels of at most one unit so that a periodic integrand cannot alias the
/// refinement stencil, and each panel is refined a minimum number of levels
/// before the delta-based acceptance test may fire. The requested tolerance
/// is further tightened tenfold internally; the delta heuristic is known to
/// be optimistic where the fourth derivative changes sign.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
    if (a == b) {
        return 0.0;
    }
    constexpr int kForcedLevels = 3;
    const double span = std::abs(b - a);
    const int panels = span > 1.0 ? static_cast<int>(std::ceil(span)) : 1;
    const double panel_tol = 0.1 * abs_tol / panels;
    double sum = 0.0;
    double lo = a;
    for (int i = 1; i <= panels; ++i) {
        const double hi = (i == panels) ? b : a + (b - a) * i / panels;
        sum += detail::adapt_panel(f, lo, hi, panel_tol, max_depth, kForcedLevels);
        lo = hi;
    }
    return sum;
}

}  // namespace kepler::quad
