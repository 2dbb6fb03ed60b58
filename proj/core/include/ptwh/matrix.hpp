#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ptwh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense complex square matrix on the full register. Universal carrier
/// for Hamiltonians, unitaries, and observables. Construction helpers
/// tag Hermitian operators; the tag is verified at construction.
struct OperatorMatrix {
    Matrix entries;
    bool hermitian = false;

    OperatorMatrix() = default;
    explicit OperatorMatrix(Matrix m) : entries(std::move(m)) {}

    /// Tags the matrix Hermitian after verifying ||M - M^dag||_max < 1e-12.
    static OperatorMatrix hermitian_tagged(Matrix m);

    std::int64_t dim() const { return entries.rows(); }

    /// ||M - M^dag||_max
    double hermiticity_defect() const;
};

using DensityMatrix = OperatorMatrix;

/// Dense state vector with a cached squared norm. `log_offset` is an
/// additive log-magnitude offset: the represented (unnormalized) state
/// is e^{log_offset} * amplitudes. It is nonzero only after gain
/// re-weighting rescaled the amplitudes to avoid overflow.
struct StateVector {
    Vector amplitudes;
    double norm_squared = 0.0;
    double log_offset = 0.0;

    StateVector() = default;
    explicit StateVector(Vector v)
        : amplitudes(std::move(v)), norm_squared(amplitudes.squaredNorm()) {}

    std::int64_t dim() const { return amplitudes.size(); }

    /// Recomputes <psi|psi> of the stored amplitudes (without the offset).
    double recompute_norm_squared() const { return amplitudes.squaredNorm(); }

    /// ln <psi~|psi~> including the offset.
    double log_norm_squared() const;

    StateVector normalized() const;
    bool is_normalized(double tol = 1e-10) const;
};

/// Full complex eigendecomposition with per-pair backward errors.
/// Eigenvalue ordering is deterministic: sorted by real part, then
/// imaginary part. Column j of right_eigenvectors pairs with
/// eigenvalues[j].
struct Spectrum {
    Vector eigenvalues;
    Matrix right_eigenvectors;
    Eigen::VectorXd residual_norms;     // ||Hv - lambda v|| / ||H||
    std::vector<bool> degenerate;       // flagged degenerate / near-EP pairs
    double matrix_norm = 0.0;           // spectral 2-norm of the input
};

}  // namespace ptwh
