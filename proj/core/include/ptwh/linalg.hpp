#pragma once

#include <vector>

#include "ptwh/layout.hpp"
#include "ptwh/matrix.hpp"

namespace ptwh {

Matrix kron(const Matrix& a, const Matrix& b);

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// Entrywise max modulus, ||M||_max.
double max_abs(const Matrix& m);

/// exp(scale * M). Diagonalizes when the eigenvector basis is well
/// conditioned (cond < 1e6); falls back to scaling-and-squaring with a
/// Pade approximant near defective points. Hermitian-tagged input takes
/// the unitary eigendecomposition path.
OperatorMatrix matrix_exponential(const OperatorMatrix& m, Complex scale);

/// Full complex (non-Hermitian) eigendecomposition with deterministic
/// ordering and per-pair backward errors.
Spectrum eig_general(const OperatorMatrix& m);

/// Eigendecomposition of a Hermitian-tagged operator: ascending real
/// eigenvalues, orthonormal eigenvector columns.
void eig_hermitian(const Matrix& m, Eigen::VectorXd& eigenvalues, Matrix& eigenvectors);

/// Reduced density matrix over `keep_qubits` (any order; rows/columns
/// follow ascending qubit index, big-endian). Trace equals the squared
/// norm of the input.
DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep_qubits,
                            const RegisterLayout& layout);

}  // namespace ptwh
