#include "cutoffqed/selfenergy.hpp"

#include <cmath>

namespace cutoffqed {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

QuadratureResult delta_e_single(SpinKind kind, const ParticleConfig& cfg,
                                double lambda, const QuadratureConfig& quad) {
    // Work in units of the bare mass; rescale the energy on exit.
    const ParticleConfig scaled{1.0, cfg.p / cfg.m, cfg.e2};
    const double lam = lambda / cfg.m;
    const double ep = energy(scaled.p, scaled.m);

    QuadratureConfig qc = quad;
    qc.transform_scale = 1.0;
    QuadratureResult r = integrate_2d(
        [&](double k, double mu) {
            return subtracted_integrand(kind, scaled, k, mu, lam);
        },
        qc);

    // Massless-minus-massive ordering; factor restores dE from the
    // (2 pi^2 / e^2) E_p dE_p normalization and the m-unit scaling.
    const double factor = -cfg.e2 / (2.0 * kPi * kPi * ep) * cfg.m;
    r.value *= factor;
    r.error *= std::abs(factor);
    return r;
}

QuadratureResult delta_e_spectral(SpinKind kind, const ParticleConfig& cfg,
                                  const RegulatorSpectrum& spectrum,
                                  const QuadratureConfig& quad, int nodes) {
    QuadratureResult total;
    total.converged = true;
    for (auto [lambda, w] : spectrum.weight_nodes(nodes)) {
        QuadratureResult r = delta_e_single(kind, cfg, lambda, quad);
        total.value += w * r.value;
        total.error += std::abs(w) * r.error;
        total.evals += r.evals;
        total.converged = total.converged && r.converged;
    }
    return total;
}

SelfEnergyReport delta_m(SpinKind kind, const ParticleConfig& cfg,
                         const RegulatorSpectrum& spectrum,
                         const QuadratureConfig& quad, int nodes) {
    const QuadratureResult de = delta_e_spectral(kind, cfg, spectrum, quad, nodes);
    const double ratio = energy(cfg.p, cfg.m) / cfg.m;
    SelfEnergyReport rep;
    rep.delta_e = de.value;
    rep.delta_m = ratio * de.value;
    rep.spin = kind;
    rep.cfg = cfg;
    rep.quad = de;
    return rep;
}

double asymptotic_delta_m_spin_half(double m, double e2, double log_lambda0) {
    return (m * e2 / kPi) * (1.5 * (log_lambda0 - std::log(m)) + 1.5);
}

SlopeFit log_slope_fit(SpinKind kind, const ParticleConfig& cfg,
                       const std::vector<double>& lambda0_list,
                       const QuadratureConfig& quad) {
    if (lambda0_list.size() < 3)
        throw InsufficientPoints("log_slope_fit needs at least 3 lambda0 values");

    SlopeFit fit;
    std::vector<double> x;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double lambda0 : lambda0_list) {
        auto rep = delta_m(kind, cfg, RegulatorSpectrum::delta(lambda0), quad);
        const double lx = std::log(lambda0);
        x.push_back(lx);
        fit.delta_m_values.push_back(rep.delta_m);
        fit.all_converged = fit.all_converged && rep.quad.converged;
        sx += lx;
        sy += rep.delta_m;
        sxx += lx * lx;
        sxy += lx * rep.delta_m;
    }
    const double n = static_cast<double>(x.size());
    const double det = n * sxx - sx * sx;
    // Degenerate grid: all lambda0 equal up to rounding.
    if (!(det > 1e-12 * n * sxx))
        throw InsufficientPoints("log_slope_fit: lambda0 grid is rank-deficient");
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::abs(fit.intercept + fit.slope * x[i] - fit.delta_m_values[i]);
        fit.max_residual = std::max(fit.max_residual, r);
    }
    return fit;
}

}  // namespace cutoffqed
