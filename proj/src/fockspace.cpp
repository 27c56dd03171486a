#include "cutoffqed/fockspace.hpp"

#include <cmath>

namespace cutoffqed {

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    DenseMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const double lik = (*this)(i, k);
            if (lik == 0.0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += lik * rhs(k, j);
        }
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
    DenseMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
    DenseMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) + rhs(i, j);
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix out(n);
    for (int i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

double DenseMatrix::max_norm(int limit) const {
    const int lim = (limit < 0) ? n_ : limit;
    double m = 0.0;
    for (int i = 0; i < lim; ++i)
        for (int j = 0; j < lim; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

LadderAlgebra build_algebra(int n_max, int sign, double scale) {
    if (n_max < 2) throw InvalidTruncation("build_algebra: n_max >= 2 required");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("build_algebra: sign must be +1 or -1");
    if (!(scale > 0.0))
        throw std::invalid_argument("build_algebra: scale must be > 0");

    const int dim = n_max + 1;
    LadderAlgebra alg;
    alg.n_max = n_max;
    alg.sign = sign;
    alg.scale = scale;
    alg.a = DenseMatrix(dim);
    alg.a_dag = DenseMatrix(dim);
    alg.parity = DenseMatrix(dim);
    alg.eta = DenseMatrix(dim);

    for (int n = 1; n <= n_max; ++n) {
        const double root = std::sqrt(scale * n);
        // a |n> = s sqrt(c n) |n-1>  (minus sign in the ghost sector)
        alg.a(n - 1, n) = sign * root;
        alg.a_dag(n, n - 1) = root;
    }
    for (int n = 0; n < dim; ++n) {
        alg.parity(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
        alg.eta(n, n) = (sign == 1 || n % 2 == 0) ? 1.0 : -1.0;
    }
    // Ghost sector: a+ a has diagonal -c n, and N = -a+ a restores the
    // nonnegative spectrum; standard sector: N = a+ a. Both cases: N = s a+ a.
    alg.number = alg.a_dag * alg.a;
    for (int n = 0; n < dim; ++n) alg.number(n, n) *= sign;
    return alg;
}

double commutator_defect(const LadderAlgebra& alg) {
    const int dim = alg.n_max + 1;
    DenseMatrix comm = alg.a * alg.a_dag - alg.a_dag * alg.a;
    DenseMatrix expected = DenseMatrix::identity(dim);
    for (int i = 0; i < dim; ++i) expected(i, i) *= alg.sign * alg.scale;
    return (comm - expected).max_norm(alg.n_max);
}

GuptaReport gupta_operator_checks(const LadderAlgebra& alg) {
    GuptaReport rep;
    const int dim = alg.n_max + 1;
    bool eig = true;
    for (int i = 0; i < dim && eig; ++i)
        for (int j = 0; j < dim; ++j) {
            const double want = (i == j) ? ((i % 2 == 0) ? 1.0 : -1.0) : 0.0;
            if (alg.parity(i, j) != want) { eig = false; break; }
        }
    rep.parity_eigenvalues = eig;
    rep.self_adjoint = (alg.parity - alg.parity.transpose()).max_norm() == 0.0;
    rep.anticommutes_a = (alg.parity * alg.a + alg.a * alg.parity).max_norm() == 0.0;
    rep.anticommutes_a_dag =
        (alg.parity * alg.a_dag + alg.a_dag * alg.parity).max_norm() == 0.0;
    return rep;
}

std::vector<double> redefined_norms(const LadderAlgebra& alg) {
    // <n| O |n>_eta = eta_nn * O_nn for the unit basis vectors.
    const int dim = alg.n_max + 1;
    std::vector<double> norms(static_cast<size_t>(dim));
    for (int n = 0; n < dim; ++n)
        norms[static_cast<size_t>(n)] = alg.eta(n, n) * alg.parity(n, n);
    return norms;
}

std::vector<double> number_operator_spectrum(const LadderAlgebra& alg) {
    const int dim = alg.n_max + 1;
    std::vector<double> eig(static_cast<size_t>(dim));
    for (int n = 0; n < dim; ++n) eig[static_cast<size_t>(n)] = alg.number(n, n);
    return eig;
}

}  // namespace cutoffqed
