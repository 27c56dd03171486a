#ifndef CUTOFFQED_PODOLSKY_HPP
#define CUTOFFQED_PODOLSKY_HPP

#include <cassert>
#include <cmath>

namespace cutoffqed {

/// Length parameter a of the higher-derivative term; the heavy branch
/// carries rest energy 1/a (a = 1/lambda0).
struct PodolskyParam {
    double a;
    bool valid() const { return a > 0.0; }
    double lambda0() const { return 1.0 / a; }
};

/// Plane-wave residual of the massless wave equation: E^2 - k^2.
inline double massless_dispersion_residual(double E, double k) {
    return E * E - k * k;
}

/// Residual of the massive branch: a^2 (E^2 - k^2) - 1.
inline double massive_dispersion_residual(double E, double k, PodolskyParam param) {
    assert(param.valid());
    return param.a * param.a * (E * E - k * k) - 1.0;
}

/// Residual of the quartic field operator on a plane wave:
/// a^2 s^2 - s with s = E^2 - k^2; factorizes as s (a^2 s - 1), so it
/// vanishes exactly on the union of the massless and massive shells.
inline double quartic_operator_residual(double E, double k, PodolskyParam param) {
    const double s = E * E - k * k;
    return s * (param.a * param.a * s - 1.0);
}

/// |1/(k2 (1 + a^2 k2)) - [1/k2 - 1/(k2 + 1/a^2)]|: the partial-fraction
/// split of the quartic kernel into massless-minus-massive parts.
/// Identically zero analytically; the return value is pure rounding.
inline double propagator_partial_fraction_gap(double k2, PodolskyParam param) {
    assert(k2 > 0.0 && param.valid());
    const double a2 = param.a * param.a;
    const double combined = 1.0 / (k2 * (1.0 + a2 * k2));
    const double split = 1.0 / k2 - 1.0 / (k2 + 1.0 / a2);
    return std::abs(combined - split);
}

/// Fourier-space residual of (1 - a^2 lap) lap G = delta:
/// |(1 + a^2 k2)(-k2) gtilde - 1| with gtilde = -1/(k2 (1 + a^2 k2)).
inline double constraint_green_residual(double k2, PodolskyParam param) {
    assert(k2 > 0.0 && param.valid());
    const double a2 = param.a * param.a;
    const double gtilde = -1.0 / (k2 * (1.0 + a2 * k2));
    return std::abs((1.0 + a2 * k2) * (-k2) * gtilde - 1.0);
}

}  // namespace cutoffqed

#endif
