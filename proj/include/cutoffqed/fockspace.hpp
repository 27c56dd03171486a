#ifndef CUTOFFQED_FOCKSPACE_HPP
#define CUTOFFQED_FOCKSPACE_HPP

#include <stdexcept>
#include <vector>

namespace cutoffqed {

struct InvalidTruncation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense square matrix, just large enough for truncated ladder algebra.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix operator-(const DenseMatrix& rhs) const;
    DenseMatrix operator+(const DenseMatrix& rhs) const;
    DenseMatrix transpose() const;

    static DenseMatrix identity(int n);

    /// max |entry|, optionally restricted to indices < limit.
    double max_norm(int limit = -1) const;

private:
    int n_ = 0;
    std::vector<double> data_;
};

/// Truncated single-mode ladder algebra with commutator sign s and
/// magnitude c: [a, a+] = s c on the untruncated subspace. For the
/// negative-sign sector the ladder actions are
///   a |n> = -sqrt(c n) |n-1>,   a+ |n> = sqrt(c (n+1)) |n+1>,
/// the metric is eta = diag(s^n), and the parity operator is
/// O = diag((-1)^n).
struct LadderAlgebra {
    int n_max = 0;
    int sign = -1;     // s, +1 or -1
    double scale = 1;  // c > 0
    DenseMatrix a;
    DenseMatrix a_dag;
    DenseMatrix number;  // N = s a+ a (nonnegative diagonal; -a+ a in the ghost sector)
    DenseMatrix parity;  // O
    DenseMatrix eta;     // diag(s^n)
};

/// c = m^2 / E_p^2 for the longitudinal mode.
inline double longitudinal_scale(double m, double ep) { return (m * m) / (ep * ep); }

/// Builds the (n_max+1)-dimensional truncated representation.
/// Throws InvalidTruncation for n_max < 2; scale must be > 0, sign +-1.
LadderAlgebra build_algebra(int n_max, int sign, double scale);

/// max-norm of [a, a+] - s c I restricted to the span of |0..n_max-1>
/// (the top level is a truncation artifact and is excluded).
double commutator_defect(const LadderAlgebra& alg);

struct GuptaReport {
    bool parity_eigenvalues = false;   // O|n> = (-1)^n |n>
    bool self_adjoint = false;         // O+ = O
    bool anticommutes_a = false;       // O a = -a O
    bool anticommutes_a_dag = false;   // O a+ = -a+ O
    bool all() const {
        return parity_eigenvalues && self_adjoint && anticommutes_a && anticommutes_a_dag;
    }
};

/// Verifies the four defining properties of the parity (Gupta) operator
/// as exact matrix identities.
GuptaReport gupta_operator_checks(const LadderAlgebra& alg);

/// <n| O |n> under the indefinite metric, for n = 0..n_max.
/// For c = 1 every entry is +1.
std::vector<double> redefined_norms(const LadderAlgebra& alg);

/// Diagonal of N: {0, c, 2c, ..., n_max c}.
std::vector<double> number_operator_spectrum(const LadderAlgebra& alg);

}  // namespace cutoffqed

#endif
