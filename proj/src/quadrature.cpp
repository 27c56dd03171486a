#include "cutoffqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cutoffqed {

namespace {

// Gauss-Kronrod 7/15 pair (QUADPACK constants, positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// 7-point Gauss weights, matching kXgk odd indices.
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Sample {
    double value = 0.0;  // integrand value
    double aux = 0.0;    // auxiliary nonnegative density (inner error)
    long cost = 1;       // evaluation count behind this sample
};

struct PanelRule {
    double kronrod = 0.0;
    double gauss = 0.0;
    double aux = 0.0;
    long cost = 0;
};

// Nested 7/15 rule on [a, b]. Endpoints are never sampled.
template <typename F>
PanelRule gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    PanelRule r;
    for (int i = 0; i < 8; ++i) {
        Sample lo = f(mid - half * kXgk[i]);
        if (!std::isfinite(lo.value))
            throw NonfiniteSample("integrand returned a nonfinite value");
        double fi = lo.value;
        double ai = lo.aux;
        r.cost += lo.cost;
        if (kXgk[i] != 0.0) {
            Sample hi = f(mid + half * kXgk[i]);
            if (!std::isfinite(hi.value))
                throw NonfiniteSample("integrand returned a nonfinite value");
            fi += hi.value;
            ai += hi.aux;
            r.cost += hi.cost;
        }
        r.kronrod += kWgk[i] * fi;
        r.aux += kWgk[i] * ai;
        if (i % 2 == 1) r.gauss += kWg[i / 2] * fi;
    }
    r.kronrod *= half;
    r.gauss *= half;
    r.aux *= half;
    return r;
}

struct Panel {
    double a, b;
    double value;
    double err;
    double aux;
    bool alive = true;
};

// Neumaier-compensated sum over alive panels, in creation order.
template <typename Get>
double compensated_total(const std::vector<Panel>& panels, const Get& get) {
    double sum = 0.0, comp = 0.0;
    for (const Panel& p : panels) {
        if (!p.alive) continue;
        double x = get(p);
        double t = sum + x;
        comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

// Adaptive bisection on [0, 1] for a Sample-valued integrand.
template <typename F>
QuadratureResult adapt01(const F& f, const QuadratureConfig& config) {
    constexpr int kInitialPanels = 8;
    std::vector<Panel> panels;
    long evals = 0;

    auto make_panel = [&](double a, double b) {
        PanelRule r = gk15(f, a, b);
        evals += r.cost;
        panels.push_back(
            {a, b, r.kronrod, std::abs(r.kronrod - r.gauss), r.aux, true});
    };

    for (int i = 0; i < kInitialPanels; ++i)
        make_panel(double(i) / kInitialPanels, double(i + 1) / kInitialPanels);

    QuadratureResult res;
    for (;;) {
        const double value = compensated_total(panels, [](const Panel& p) { return p.value; });
        const double err = compensated_total(panels, [](const Panel& p) { return p.err; });
        const double aux = compensated_total(panels, [](const Panel& p) { return p.aux; });
        res.value = value;
        res.error = std::hypot(err, aux);
        res.evals = evals;
        const double tol = std::max(config.abs_tol, config.rel_tol * std::abs(value));
        if (res.error <= tol) {
            res.converged = true;
            return res;
        }
        // Worst alive panel; ties broken toward the earliest-created one.
        std::size_t worst = panels.size();
        double worst_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].alive && panels[i].err > worst_err) {
                worst_err = panels[i].err;
                worst = i;
            }
        }
        if (worst == panels.size()) return res;  // nothing refinable
        if (evals + 2 * 15 > config.max_evals) return res;  // budget-exhausted
        // Subinterval too small to split: further bisection would push
        // nodes onto the interval boundary. Stop with converged = false.
        if (panels[worst].b - panels[worst].a <= 0x1p-40) return res;
        Panel& w = panels[worst];
        w.alive = false;
        const double a = w.a, b = w.b, mid = 0.5 * (w.a + w.b);
        make_panel(a, mid);
        make_panel(mid, b);
    }
}

}  // namespace

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         const QuadratureConfig& config) {
    const double scale = config.transform_scale;
    auto g = [&](double t) -> Sample {
        const double u = 1.0 - t;
        const double k = scale * t / u;
        return {f(k) * scale / (u * u), 0.0, 1};
    };
    return adapt01(g, config);
}

QuadratureResult integrate_angular(const std::function<double(double)>& f,
                                   const QuadratureConfig& config) {
    auto g = [&](double mu) -> Sample { return {f(mu), 0.0, 1}; };
    PanelRule whole = gk15(g, -1.0, 1.0);
    QuadratureResult res;
    res.value = whole.kronrod;
    res.error = std::abs(whole.kronrod - whole.gauss);
    res.evals = whole.cost;
    double tol = std::max(config.abs_tol, config.rel_tol * std::abs(res.value));
    if (res.error > tol) {
        // One refinement level.
        PanelRule lo = gk15(g, -1.0, 0.0);
        PanelRule hi = gk15(g, 0.0, 1.0);
        res.value = lo.kronrod + hi.kronrod;
        res.error = std::abs(lo.kronrod - lo.gauss) + std::abs(hi.kronrod - hi.gauss);
        res.evals += lo.cost + hi.cost;
        tol = std::max(config.abs_tol, config.rel_tol * std::abs(res.value));
    }
    res.converged = res.error <= tol;
    return res;
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const QuadratureConfig& config) {
    const double scale = config.transform_scale;
    // Inner angular integrals are fully adaptive and held one decade
    // tighter than the outer pass, so the propagated inner error (the
    // aux component) stays below the outer tolerance.
    QuadratureConfig inner = config;
    inner.abs_tol = 0.0;
    inner.rel_tol = 0.1 * config.rel_tol;
    inner.max_evals = 4000;
    auto g = [&](double t) -> Sample {
        const double u = 1.0 - t;
        const double k = scale * t / u;
        auto h = [&](double s) -> Sample {
            return {2.0 * f(k, 2.0 * s - 1.0), 0.0, 1};  // mu = 2s - 1
        };
        QuadratureResult ang = adapt01(h, inner);
        const double jac = scale / (u * u);
        return {ang.value * jac, ang.error * jac, ang.evals};
    };
    return adapt01(g, config);
}

}  // namespace cutoffqed
