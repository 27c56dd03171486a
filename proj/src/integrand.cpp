#include "cutoffqed/integrand.hpp"

namespace cutoffqed {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Shared kernel T of both self-energy expressions.
inline double kernel(double efv, double om, double ep) {
    const double s = efv + om;
    return s / (efv * om * (s * s - ep * ep));
}

}  // namespace

double raw_integrand(SpinKind kind, const ParticleConfig& cfg, const PhotonMode& mode) {
    const double m2 = cfg.m * cfg.m;
    const double lam2 = mode.lambda * mode.lambda;
    const double ep = energy(cfg.p, cfg.m);
    const double efv = ef(cfg.p, mode.k, mode.mu, cfg.m);
    const double om = omega(mode.k, mode.lambda);
    double core;
    if (kind == SpinKind::Half) {
        core = (m2 + 0.5 * lam2) * kernel(efv, om, ep) + 0.5 / om - 0.5 / efv;
    } else {
        core = (m2 - 0.25 * lam2) * kernel(efv, om, ep) + 0.5 / om + 0.25 / efv;
    }
    return kTwoPi * mode.k * mode.k * core;
}

double subtracted_integrand(SpinKind kind, const ParticleConfig& cfg,
                            double k, double mu, double lambda) {
    const double m2 = cfg.m * cfg.m;
    const double lam2 = lambda * lambda;
    const double ep = energy(cfg.p, cfg.m);
    const double efv = ef(cfg.p, k, mu, cfg.m);
    const double om = omega(k, lambda);
    const double s = (kind == SpinKind::Half) ? 0.5 : -0.25;
    // 1/(2 omega) - 1/(2 k) rewritten pole-free as -lambda^2/(2 omega k (omega + k)).
    const double core = m2 * (kernel(efv, om, ep) - kernel(efv, k, ep))
                      + s * lam2 * kernel(efv, om, ep)
                      - lam2 / (2.0 * om * k * (om + k));
    return kTwoPi * k * k * core;
}

}  // namespace cutoffqed
