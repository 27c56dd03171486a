#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cutoffqed/csv.hpp"
#include "cutoffqed/fockspace.hpp"
#include "cutoffqed/integrand.hpp"
#include "cutoffqed/podolsky.hpp"
#include "cutoffqed/regulator.hpp"
#include "cutoffqed/selfenergy.hpp"

namespace {

using namespace cutoffqed;

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitUsage = 64;

struct OutputTarget {
    std::string path;  // empty: stdout

    template <typename Fn>
    int with_stream(Fn&& fn) const {
        if (path.empty()) return fn(std::cout);
        std::ofstream file(path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return kExitUsage;
        }
        return fn(file);
    }
};

std::vector<double> parse_csv_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::string spin_name(SpinKind kind) { return kind == SpinKind::Half ? "half" : "zero"; }

SpinKind parse_spin(const std::string& s) {
    if (s == "half") return SpinKind::Half;
    if (s == "zero") return SpinKind::Zero;
    throw CLI::ValidationError("--spin", "must be 'half' or 'zero'");
}

int thread_cap() {
    if (const char* env = std::getenv("CUTOFFQED_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::vector<std::string> result_header() {
    return {"spin", "p", "m", "e2", "lambda0_or_spec", "delta_e",
            "delta_m", "quad_error", "evals", "converged"};
}

std::vector<CsvCell> result_row(SpinKind spin, const ParticleConfig& cfg,
                                const std::string& spec_text,
                                const SelfEnergyReport& rep) {
    return {spin_name(spin), cfg.p, cfg.m, cfg.e2, spec_text,
            rep.delta_e, rep.delta_m, rep.quad.error,
            static_cast<long long>(rep.quad.evals), rep.quad.converged};
}

// Shared numeric flags for the self-energy subcommands. CLI values are
// in units of m; --m rescales at this boundary.
struct SelfEnergyArgs {
    std::string spin = "half";
    double p = 0.0;
    double m = 1.0;
    double e2 = 1.0 / 137.036;
    std::string regulator = "delta:1000";
    std::string lambda0_list;
    std::string p_grid;
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    long max_evals = 2'000'000;
    std::string out;

    void add_common(CLI::App* app, bool sweep_mode) {
        app->add_option("--spin", spin, "particle spin: half or zero");
        app->add_option("--m", m, "bare mass (sets the unit of all other masses)");
        app->add_option("--e2", e2, "squared charge");
        app->add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
        app->add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
        app->add_option("--max-evals", max_evals, "integrand evaluation budget");
        app->add_option("--out", out, "output file (default stdout)");
        if (sweep_mode) {
            app->add_option("--lambda0", lambda0_list, "regulator masses, units of m (CSV list)")
                ->required();
            app->add_option("--p-grid", p_grid, "momenta, units of m (CSV list)");
        } else {
            app->add_option("--p", p, "momentum magnitude, units of m");
            app->add_option("--regulator", regulator,
                            "spectrum: delta:L0 or uniform:LA,LB (units of m)");
        }
    }

    QuadratureConfig quad() const {
        QuadratureConfig qc;
        qc.rel_tol = rel_tol;
        qc.abs_tol = abs_tol;
        qc.max_evals = max_evals;
        return qc;
    }
};

int run_compute(const SelfEnergyArgs& args) {
    const SpinKind spin = parse_spin(args.spin);
    const ParticleConfig cfg{args.m, args.p * args.m, args.e2};
    if (!cfg.valid()) throw CLI::ValidationError("--m/--p/--e2", "out of range");
    const RegulatorSpectrum spectrum =
        RegulatorSpectrum::parse(args.regulator).scaled(args.m);
    const SelfEnergyReport rep = delta_m(spin, cfg, spectrum, args.quad());

    return OutputTarget{args.out}.with_stream([&](std::ostream& os) {
        emit_csv(os, result_header(),
                 {result_row(spin, cfg, args.regulator, rep)});
        return rep.quad.converged ? kExitOk : kExitNotConverged;
    });
}

int run_sweep(const SelfEnergyArgs& args) {
    const SpinKind spin = parse_spin(args.spin);
    const std::vector<double> lambda0s = parse_csv_list(args.lambda0_list);
    const std::vector<double> momenta =
        args.p_grid.empty() ? std::vector<double>{0.0} : parse_csv_list(args.p_grid);

    struct Job {
        double lambda0;
        double p;
    };
    std::vector<Job> jobs;
    for (double lambda0 : lambda0s)
        for (double p : momenta) jobs.push_back({lambda0, p});

    std::vector<std::vector<CsvCell>> rows(jobs.size());
    std::vector<bool> converged(jobs.size(), true);

    const int threads = std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const ParticleConfig cfg{args.m, jobs[i].p * args.m, args.e2};
            const RegulatorSpectrum spectrum =
                RegulatorSpectrum::delta(jobs[i].lambda0).scaled(args.m);
            const SelfEnergyReport rep = delta_m(spin, cfg, spectrum, args.quad());
            std::ostringstream spec_text;
            spec_text.precision(17);
            spec_text << "delta:" << jobs[i].lambda0;
            rows[i] = result_row(spin, cfg, spec_text.str(), rep);
            converged[i] = rep.quad.converged;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const bool all_ok =
        std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
    return OutputTarget{args.out}.with_stream([&](std::ostream& os) {
        emit_csv(os, result_header(), rows);
        return all_ok ? kExitOk : kExitNotConverged;
    });
}

int run_integrand_dump(const SelfEnergyArgs& args, double lambda, int samples) {
    const SpinKind spin = parse_spin(args.spin);
    const ParticleConfig cfg{args.m, args.p * args.m, args.e2};
    std::vector<std::vector<CsvCell>> rows;
    // Log-spaced k grid over [1e-2, 1e3]*m, five angular stations.
    const double k_lo = 1e-2, k_hi = 1e3;
    for (int i = 0; i < samples; ++i) {
        const double frac = samples > 1 ? double(i) / (samples - 1) : 0.0;
        const double k = args.m * k_lo * std::pow(k_hi / k_lo, frac);
        for (double mu : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const double v =
                subtracted_integrand(spin, cfg, k, mu, lambda * args.m);
            rows.push_back({k, mu, lambda * args.m, v});
        }
    }
    return OutputTarget{args.out}.with_stream([&](std::ostream& os) {
        emit_csv(os, {"k", "mu", "lambda", "value"}, rows);
        return kExitOk;
    });
}

int run_podolsky_check(double a, int samples, unsigned seed, const std::string& out) {
    const PodolskyParam param{a};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_k2(std::log(1e-6), std::log(1e6));

    double max_pf = 0.0, max_green = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double k2 = std::exp(log_k2(rng));
        const double ref = 1.0 / (k2 * (1.0 + a * a * k2));
        max_pf = std::max(max_pf, propagator_partial_fraction_gap(k2, param) / ref);
        max_green = std::max(max_green, constraint_green_residual(k2, param));
    }
    // Shell residuals of the quartic operator, both branches.
    double max_shell = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double k = std::exp(log_k2(rng) * 0.5);
        max_shell = std::max(
            max_shell, std::abs(quartic_operator_residual(k, k, param)));
        const double e_massive = std::sqrt(k * k + 1.0 / (a * a));
        const double scale = std::max(1.0, e_massive * e_massive);
        max_shell = std::max(
            max_shell,
            std::abs(quartic_operator_residual(e_massive, k, param)) / (scale * scale));
    }

    const bool pass = max_pf < 1e-10 && max_green < 1e-10 && max_shell < 1e-10;
    return OutputTarget{out}.with_stream([&](std::ostream& os) {
        os.precision(17);
        os << "partial_fraction_max_rel_residual " << max_pf << "\n"
           << "constraint_green_max_residual " << max_green << "\n"
           << "quartic_shell_max_residual " << max_shell << "\n"
           << "status " << (pass ? "pass" : "fail") << "\n";
        return pass ? kExitOk : kExitCheckFailed;
    });
}

int run_fock_check(int nmax, double scale, const std::string& out) {
    const LadderAlgebra ghost = build_algebra(nmax, -1, scale);
    const double defect = commutator_defect(ghost);
    const GuptaReport gupta = gupta_operator_checks(ghost);
    const std::vector<double> norms = redefined_norms(ghost);
    const std::vector<double> spectrum = number_operator_spectrum(ghost);

    double min_norm = norms.front();
    for (double n : norms) min_norm = std::min(min_norm, n);
    double spectrum_defect = 0.0;
    for (size_t n = 0; n < spectrum.size(); ++n)
        spectrum_defect =
            std::max(spectrum_defect, std::abs(spectrum[n] - scale * double(n)));

    const bool pass = defect < 1e-12 && gupta.all() && min_norm > 0.0 &&
                      spectrum_defect < 1e-12;
    return OutputTarget{out}.with_stream([&](std::ostream& os) {
        os.precision(17);
        os << "commutator_defect " << defect << "\n"
           << "gupta_parity_eigenvalues " << gupta.parity_eigenvalues << "\n"
           << "gupta_self_adjoint " << gupta.self_adjoint << "\n"
           << "gupta_anticommutes_a " << gupta.anticommutes_a << "\n"
           << "gupta_anticommutes_a_dag " << gupta.anticommutes_a_dag << "\n"
           << "min_redefined_norm " << min_norm << "\n"
           << "number_spectrum_defect " << spectrum_defect << "\n"
           << "status " << (pass ? "pass" : "fail") << "\n";
        return pass ? kExitOk : kExitCheckFailed;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relativistically cut-off self-energy calculator and model checks"};
    app.require_subcommand(1);

    SelfEnergyArgs compute_args;
    auto* compute = app.add_subcommand("compute", "one self-energy evaluation");
    compute_args.add_common(compute, false);

    SelfEnergyArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "delta_m over a lambda0 (x p) grid");
    sweep_args.add_common(sweep, true);

    SelfEnergyArgs dump_args;
    double dump_lambda = 1.0;
    int dump_samples = 25;
    auto* dump = app.add_subcommand("integrand-dump",
                                    "subtracted integrand samples as CSV");
    dump->add_option("--spin", dump_args.spin, "particle spin: half or zero");
    dump->add_option("--p", dump_args.p, "momentum magnitude, units of m");
    dump->add_option("--m", dump_args.m, "bare mass");
    dump->add_option("--lambda", dump_lambda, "auxiliary photon mass, units of m");
    dump->add_option("--samples", dump_samples, "k-grid size");
    dump->add_option("--out", dump_args.out, "output file (default stdout)");

    double pod_a = 1.0;
    int pod_samples = 10000;
    unsigned pod_seed = 1;
    std::string pod_out;
    auto* pod = app.add_subcommand("podolsky-check",
                                   "momentum-space field identities");
    pod->add_option("--a", pod_a, "higher-derivative length parameter")->required();
    pod->add_option("--samples", pod_samples, "random sample count");
    pod->add_option("--seed", pod_seed, "RNG seed");
    pod->add_option("--out", pod_out, "output file (default stdout)");

    int fock_nmax = 12;
    double fock_scale = 1.0;
    std::string fock_out;
    auto* fock = app.add_subcommand("fock-check",
                                    "indefinite-metric ladder algebra identities");
    fock->add_option("--nmax", fock_nmax, "truncation level");
    fock->add_option("--scale", fock_scale, "commutator magnitude c");
    fock->add_option("--out", fock_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (sweep->parsed()) return run_sweep(sweep_args);
        if (dump->parsed()) return run_integrand_dump(dump_args, dump_lambda, dump_samples);
        if (pod->parsed()) return run_podolsky_check(pod_a, pod_samples, pod_seed, pod_out);
        if (fock->parsed()) return run_fock_check(fock_nmax, fock_scale, fock_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidSpectrum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
