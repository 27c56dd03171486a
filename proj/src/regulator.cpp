#include "cutoffqed/regulator.hpp"

#include <cmath>
#include <sstream>

namespace cutoffqed {

RegulatorSpectrum::RegulatorSpectrum(Kind kind, double a, double b)
    : kind_(kind), a_(a), b_(b) {}

RegulatorSpectrum RegulatorSpectrum::delta(double lambda0) {
    if (!(lambda0 > 0.0))
        throw InvalidSpectrum("delta spectrum requires lambda0 > 0");
    return RegulatorSpectrum(Kind::Delta, lambda0, lambda0);
}

RegulatorSpectrum RegulatorSpectrum::uniform(double la, double lb) {
    if (!(la > 0.0) || !(lb >= la))
        throw InvalidSpectrum("uniform spectrum requires 0 < la <= lb");
    return RegulatorSpectrum(Kind::Uniform, la, lb);
}

RegulatorSpectrum RegulatorSpectrum::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidSpectrum("regulator spec must look like delta:L0 or uniform:LA,LB");
    const std::string name = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    try {
        if (name == "delta") {
            return delta(std::stod(args));
        }
        if (name == "uniform") {
            auto comma = args.find(',');
            if (comma == std::string::npos)
                throw InvalidSpectrum("uniform regulator needs two masses: uniform:LA,LB");
            return uniform(std::stod(args.substr(0, comma)),
                           std::stod(args.substr(comma + 1)));
        }
    } catch (const std::logic_error& e) {
        throw InvalidSpectrum(std::string("bad regulator parameter in '") + text + "'");
    }
    throw InvalidSpectrum("unknown regulator kind '" + name + "'");
}

std::vector<std::pair<double, double>> RegulatorSpectrum::weight_nodes(int n) const {
    if (n < 1) throw InvalidSpectrum("node count must be >= 1");
    if (kind_ == Kind::Delta || a_ == b_) return {{a_, 1.0}};
    // Uniform density 1/(lb-la); map Gauss-Legendre from [-1,1].
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(n));
    const double mid = 0.5 * (a_ + b_);
    const double half = 0.5 * (b_ - a_);
    for (auto [x, w] : gauss_legendre(n))
        out.emplace_back(mid + half * x, 0.5 * w);
    return out;
}

double RegulatorSpectrum::log_moment() const {
    if (kind_ == Kind::Delta || a_ == b_) return std::log(a_);
    // (1/(b-a)) * [x ln x - x] from a to b
    auto F = [](double x) { return x * std::log(x) - x; };
    return (F(b_) - F(a_)) / (b_ - a_);
}

std::string RegulatorSpectrum::description() const {
    std::ostringstream os;
    os.precision(17);
    if (kind_ == Kind::Delta)
        os << "delta:" << a_;
    else
        os << "uniform:" << a_ << "," << b_;
    return os.str();
}

RegulatorSpectrum RegulatorSpectrum::scaled(double factor) const {
    if (!(factor > 0.0)) throw InvalidSpectrum("scale factor must be > 0");
    return RegulatorSpectrum(kind_, a_ * factor, b_ * factor);
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    std::vector<std::pair<double, double>> nw(static_cast<size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration from the Chebyshev-angle initial guess.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[static_cast<size_t>(i)] = {x, w};
        nw[static_cast<size_t>(n - 1 - i)] = {-x, w};
    }
    if (n % 2 == 1) nw[static_cast<size_t>(n / 2)].first = 0.0;  // exact center
    return nw;
}

}  // namespace cutoffqed
