#ifndef CUTOFFQED_REGULATOR_HPP
#define CUTOFFQED_REGULATOR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutoffqed {

struct InvalidSpectrum : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Normalized distribution G(lambda) over auxiliary photon masses.
/// Two families: a point mass at lambda0 and a uniform density on [la, lb].
/// Support must lie strictly in lambda > 0; total weight is 1.
class RegulatorSpectrum {
public:
    enum class Kind { Delta, Uniform };

    static RegulatorSpectrum delta(double lambda0);
    static RegulatorSpectrum uniform(double la, double lb);

    /// Parses the CLI encoding "delta:L0" or "uniform:LA,LB".
    static RegulatorSpectrum parse(const std::string& text);

    Kind kind() const { return kind_; }
    double param_a() const { return a_; }  // lambda0 or la
    double param_b() const { return b_; }  // lambda0 or lb

    /// Quadrature nodes (lambda_i, w_i) with sum(w) ~ 1 such that
    /// sum w_i f(lambda_i) approximates the G-weighted integral of f.
    /// Delta kind returns exactly {(lambda0, 1)}; uniform uses
    /// fixed-order Gauss-Legendre on the support interval.
    std::vector<std::pair<double, double>> weight_nodes(int n) const;

    /// integral of G(lambda) ln(lambda); equals ln(lambda0) for delta.
    double log_moment() const;

    std::string description() const;

    /// Rescales all mass parameters by a factor (unit-of-m conversion).
    RegulatorSpectrum scaled(double factor) const;

private:
    RegulatorSpectrum(Kind kind, double a, double b);
    Kind kind_;
    double a_;
    double b_;
};

/// Gauss-Legendre nodes and weights on [-1, 1], n >= 1.
std::vector<std::pair<double, double>> gauss_legendre(int n);

}  // namespace cutoffqed

#endif
