#ifndef CUTOFFQED_KINEMATICS_HPP
#define CUTOFFQED_KINEMATICS_HPP

#include <cassert>
#include <cmath>

namespace cutoffqed {

/// External particle state: bare mass, momentum magnitude, squared charge.
/// Units: hbar = c = 1, energies in arbitrary but consistent units.
struct ParticleConfig {
    double m;   // bare mass, > 0
    double p;   // momentum magnitude, >= 0
    double e2;  // squared charge (coupling), > 0

    bool valid() const { return m > 0.0 && p >= 0.0 && e2 > 0.0; }
};

/// Virtual photon state on the radial-angular integration domain.
struct PhotonMode {
    double k;       // photon momentum magnitude, >= 0
    double mu;      // cos(angle between p and k), in [-1, 1]
    double lambda;  // auxiliary photon mass, >= 0

    bool valid() const {
        return k >= 0.0 && mu >= -1.0 && mu <= 1.0 && lambda >= 0.0;
    }
};

/// E_p = sqrt(p^2 + m^2)
inline double energy(double p, double m) {
    assert(m > 0.0 && p >= 0.0);
    return std::sqrt(p * p + m * m);
}

/// omega = sqrt(k^2 + lambda^2)
inline double omega(double k, double lambda) {
    assert(k >= 0.0 && lambda >= 0.0);
    return std::sqrt(k * k + lambda * lambda);
}

/// E_f = sqrt((p + k)^2 + m^2) = sqrt(p^2 + k^2 + 2 p k mu + m^2)
inline double ef(double p, double k, double mu, double m) {
    assert(m > 0.0);
    return std::sqrt(p * p + k * k + 2.0 * p * k * mu + m * m);
}

}  // namespace cutoffqed

#endif
