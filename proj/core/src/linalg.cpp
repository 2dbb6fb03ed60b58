#include "ptwh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "ptwh/errors.hpp"

namespace ptwh {

OperatorMatrix OperatorMatrix::hermitian_tagged(Matrix m) {
    OperatorMatrix op(std::move(m));
    const double defect = op.hermiticity_defect();
    if (defect >= 1e-12) {
        throw NumericError("matrix tagged Hermitian has defect " +
                           std::to_string(defect));
    }
    op.hermitian = true;
    return op;
}

double OperatorMatrix::hermiticity_defect() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double StateVector::log_norm_squared() const {
    return std::log(amplitudes.squaredNorm()) + 2.0 * log_offset;
}

StateVector StateVector::normalized() const {
    StateVector out;
    out.amplitudes = amplitudes / std::sqrt(amplitudes.squaredNorm());
    out.norm_squared = 1.0;
    out.log_offset = 0.0;
    return out;
}

bool StateVector::is_normalized(double tol) const {
    return log_offset == 0.0 && std::abs(norm_squared - 1.0) < tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double spectral_norm(const Matrix& m) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

OperatorMatrix matrix_exponential(const OperatorMatrix& m, Complex scale) {
    if (!m.entries.allFinite() || !std::isfinite(scale.real()) ||
        !std::isfinite(scale.imag())) {
        throw NumericError("matrix_exponential: non-finite input");
    }
    if (m.entries.rows() != m.entries.cols()) {
        throw NumericError("matrix_exponential: matrix not square");
    }

    if (m.hermitian) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(m.entries);
        const Matrix& v = es.eigenvectors();
        Vector d(es.eigenvalues().size());
        for (Eigen::Index i = 0; i < d.size(); ++i) {
            d(i) = std::exp(scale * es.eigenvalues()(i));
        }
        return OperatorMatrix(v * d.asDiagonal() * v.adjoint());
    }

    Eigen::ComplexEigenSolver<Matrix> es(m.entries);
    if (es.info() == Eigen::Success) {
        const Matrix& v = es.eigenvectors();
        Eigen::JacobiSVD<Matrix> svd(v);
        const double smin = svd.singularValues()(svd.singularValues().size() - 1);
        const double cond = smin > 0.0 ? svd.singularValues()(0) / smin
                                       : std::numeric_limits<double>::infinity();
        if (cond < 1e6) {
            Vector d(es.eigenvalues().size());
            for (Eigen::Index i = 0; i < d.size(); ++i) {
                d(i) = std::exp(scale * es.eigenvalues()(i));
            }
            Matrix rhs = d.asDiagonal() * v.inverse();
            return OperatorMatrix(v * rhs);
        }
    }

    // Near-defective: scaling-and-squaring Pade.
    Matrix scaled = scale * m.entries;
    return OperatorMatrix(scaled.exp());
}

Spectrum eig_general(const OperatorMatrix& m) {
    if (!m.entries.allFinite()) {
        throw NumericError("eig_general: non-finite entries");
    }
    const Eigen::Index n = m.entries.rows();
    Eigen::ComplexEigenSolver<Matrix> es(m.entries);
    if (es.info() != Eigen::Success) {
        throw SpectralError("eigensolver failed to converge (info=" +
                            std::to_string(static_cast<int>(es.info())) +
                            ", dim=" + std::to_string(n) + ")");
    }

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const Complex la = es.eigenvalues()(a), lb = es.eigenvalues()(b);
        if (la.real() != lb.real()) return la.real() < lb.real();
        return la.imag() < lb.imag();
    });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.right_eigenvectors.resize(n, n);
    s.residual_norms.resize(n);
    s.degenerate.assign(n, false);
    s.matrix_norm = spectral_norm(m.entries);

    for (Eigen::Index i = 0; i < n; ++i) {
        s.eigenvalues(i) = es.eigenvalues()(order[i]);
        Vector v = es.eigenvectors().col(order[i]);
        v /= v.norm();
        s.right_eigenvectors.col(i) = v;
        const double resid = (m.entries * v - s.eigenvalues(i) * v).norm();
        s.residual_norms(i) = s.matrix_norm > 0.0 ? resid / s.matrix_norm : resid;
    }

    // Flag defective / near-EP pairs: coincident eigenvalues with nearly
    // parallel right eigenvectors, or residuals beyond backward-error scale.
    const double eig_tol = 1e-8 * std::max(1.0, s.matrix_norm);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (s.residual_norms(i) > 1e-8) s.degenerate[i] = true;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (std::abs(s.eigenvalues(i) - s.eigenvalues(j)) > eig_tol) continue;
            const double overlap = std::abs(
                s.right_eigenvectors.col(i).dot(s.right_eigenvectors.col(j)));
            if (overlap > 1.0 - 1e-6) {
                s.degenerate[i] = true;
                s.degenerate[j] = true;
            }
        }
    }
    return s;
}

void eig_hermitian(const Matrix& m, Eigen::VectorXd& eigenvalues, Matrix& eigenvectors) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) {
        throw SpectralError("Hermitian eigensolver failed to converge");
    }
    eigenvalues = es.eigenvalues();
    eigenvectors = es.eigenvectors();
}

DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep_qubits,
                            const RegisterLayout& layout) {
    if (state.dim() != layout.total_dim()) {
        throw LayoutError("state dimension does not match layout");
    }
    if (keep_qubits.empty()) {
        throw LayoutError("partial_trace: keep set is empty");
    }
    std::vector<int> keep = keep_qubits;
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw LayoutError("partial_trace: duplicate qubit in keep set");
    }
    for (int q : keep) layout.check_qubit(q);

    const int n_total = layout.total_qubits();
    std::vector<int> keep_bits, trace_bits;
    for (int q : keep) keep_bits.push_back(layout.bit_of(q));
    for (int q = 0; q < n_total; ++q) {
        if (!std::binary_search(keep.begin(), keep.end(), q)) {
            trace_bits.push_back(layout.bit_of(q));
        }
    }
    // keep[] ascends in qubit index; the reduced register keeps the same
    // big-endian order, so keep_bits[0] is the most significant reduced bit.
    const int nk = static_cast<int>(keep_bits.size());
    const int nt = static_cast<int>(trace_bits.size());
    const std::int64_t dk = std::int64_t{1} << nk;
    const std::int64_t dt = std::int64_t{1} << nt;

    auto scatter = [](std::int64_t value, const std::vector<int>& bits) {
        std::uint64_t out = 0;
        const int n = static_cast<int>(bits.size());
        for (int i = 0; i < n; ++i) {
            if (value & (std::int64_t{1} << (n - 1 - i))) {
                out |= std::uint64_t{1} << bits[i];
            }
        }
        return out;
    };

    std::vector<std::uint64_t> keep_addr(dk), trace_addr(dt);
    for (std::int64_t a = 0; a < dk; ++a) keep_addr[a] = scatter(a, keep_bits);
    for (std::int64_t t = 0; t < dt; ++t) trace_addr[t] = scatter(t, trace_bits);

    Matrix rho = Matrix::Zero(dk, dk);
    for (std::int64_t t = 0; t < dt; ++t) {
        for (std::int64_t a = 0; a < dk; ++a) {
            const Complex va = state.amplitudes(
                static_cast<std::int64_t>(keep_addr[a] | trace_addr[t]));
            if (va == Complex{0.0, 0.0}) continue;
            for (std::int64_t b = 0; b < dk; ++b) {
                const Complex vb = state.amplitudes(
                    static_cast<std::int64_t>(keep_addr[b] | trace_addr[t]));
                rho(a, b) += va * std::conj(vb);
            }
        }
    }
    DensityMatrix out(std::move(rho));
    out.hermitian = true;
    return out;
}

}  // namespace ptwh
