#ifndef CUTOFFQED_QUADRATURE_HPP
#define CUTOFFQED_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace cutoffqed {

struct NonfiniteSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    long max_evals = 2'000'000;
    /// Scale S of the semi-infinite mapping k = S t/(1-t), t in [0,1).
    double transform_scale = 1.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error, >= 0
    long evals = 0;
    bool converged = false;  // error <= max(abs_tol, rel_tol*|value|)
};

/// Integral of f over [0, inf). The domain is mapped to t in [0,1) via
/// k = S t/(1-t) and integrated with adaptive bisection of t-panels,
/// each evaluated by a nested Gauss-Kronrod 7/15 pair (open rule: the
/// t = 1 endpoint is never sampled). Panel totals use compensated
/// summation; refinement order is deterministic.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& config);

/// Integral of f over [-1, 1]: fixed Gauss-Kronrod 7/15 with at most one
/// bisection refinement. Exact for polynomials up to the Kronrod order.
QuadratureResult integrate_angular(const std::function<double(double)>& f,
                                   const QuadratureConfig& config);

/// Tensor composition over [0, inf) x [-1, 1]: outer adaptive in k,
/// inner angular rule per k node; inner error estimates are integrated
/// alongside and combined with the outer estimate in quadrature.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const QuadratureConfig& config);

}  // namespace cutoffqed

#endif
