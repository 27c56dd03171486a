#ifndef CUTOFFQED_INTEGRAND_HPP
#define CUTOFFQED_INTEGRAND_HPP

#include "cutoffqed/kinematics.hpp"

namespace cutoffqed {

enum class SpinKind { Half, Zero };

/// Full single-mass integrand density of (2pi^2/e^2) E_p dE_p on the
/// (k, mu) domain, with the reduced measure 2 pi k^2 folded in:
///
///   spin-1/2:  2 pi k^2 [ (m^2 + lambda^2/2) T + 1/(2 omega) - 1/(2 E_f) ]
///   spin-0:    2 pi k^2 [ (m^2 - lambda^2/4) T + 1/(2 omega) + 1/(4 E_f) ]
///
/// with T = (E_f + omega) / (E_f omega [(E_f + omega)^2 - E_p^2]).
/// Each fixed-lambda integral diverges; only differences of these
/// densities at two lambda values are integrable.
double raw_integrand(SpinKind kind, const ParticleConfig& cfg, const PhotonMode& mode);

/// Pointwise lambda-minus-zero difference of raw_integrand at identical
/// (k, mu). The lambda-independent 1/E_f terms cancel exactly and are
/// never evaluated; the remaining terms are grouped as
///   m^2 (T(lambda) - T(0)) + s lambda^2 T(lambda) - lambda^2/(2 omega k (omega + k))
/// (s = +1/2 or -1/4) to avoid cancellation loss. Identically zero at
/// lambda = 0.
double subtracted_integrand(SpinKind kind, const ParticleConfig& cfg,
                            double k, double mu, double lambda);

}  // namespace cutoffqed

#endif
