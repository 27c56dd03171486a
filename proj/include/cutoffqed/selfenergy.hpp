#ifndef CUTOFFQED_SELFENERGY_HPP
#define CUTOFFQED_SELFENERGY_HPP

#include <vector>

#include "cutoffqed/integrand.hpp"
#include "cutoffqed/kinematics.hpp"
#include "cutoffqed/quadrature.hpp"
#include "cutoffqed/regulator.hpp"

namespace cutoffqed {

struct InsufficientPoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SelfEnergyReport {
    double delta_e = 0.0;  // regulated energy shift
    double delta_m = 0.0;  // (E_p/m) * delta_e
    SpinKind spin = SpinKind::Half;
    ParticleConfig cfg{};
    QuadratureResult quad{};  // combined quadrature metadata
};

/// Regulated single-mass energy shift: the massless-minus-massive
/// combination dE_p(0) - dE_p(lambda), evaluated as
///   -[e^2/(2 pi^2 E_p)] * integral of subtracted_integrand over
///   [0,inf) x [-1,1].
/// Internally rescaled to units of the bare mass. The result carries
/// quadrature metadata; converged=false means the budget ran out.
QuadratureResult delta_e_single(SpinKind kind, const ParticleConfig& cfg,
                                double lambda, const QuadratureConfig& quad);

/// Spectrum-weighted shift: sum of w * delta_e_single(lambda) over the
/// regulator's weight nodes. Delta spectra reduce to a single call.
QuadratureResult delta_e_spectral(SpinKind kind, const ParticleConfig& cfg,
                                  const RegulatorSpectrum& spectrum,
                                  const QuadratureConfig& quad, int nodes = 64);

/// Mass correction (E_p/m) * delta_e_spectral; the quantity expected to
/// be independent of p.
SelfEnergyReport delta_m(SpinKind kind, const ParticleConfig& cfg,
                         const RegulatorSpectrum& spectrum,
                         const QuadratureConfig& quad, int nodes = 64);

/// Closed-form spin-1/2 asymptotic mass correction
///   (m e^2 / pi) (3/2 (log_lambda0 - ln m) + 3/2)
/// with log_lambda0 the regulator log moment.
double asymptotic_delta_m_spin_half(double m, double e2, double log_lambda0);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;        // max |fit - data| over the points
    bool all_converged = true;        // every member quadrature converged
    std::vector<double> delta_m_values;
};

/// Least-squares slope of delta_m against ln(lambda0) over a grid of
/// delta-regulator masses. Throws InsufficientPoints for fewer than
/// three points or a degenerate (zero-spread) grid.
SlopeFit log_slope_fit(SpinKind kind, const ParticleConfig& cfg,
                       const std::vector<double>& lambda0_list,
                       const QuadratureConfig& quad);

}  // namespace cutoffqed

#endif
