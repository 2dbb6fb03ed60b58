#include "ptwh/state_prep.hpp"

#include <cmath>

#include "ptwh/errors.hpp"
#include "ptwh/linalg.hpp"

namespace ptwh {

ThermalConfig thermal_config(const SykRealization& realization, double beta) {
    if (beta < 0.0) throw ModelError("beta must be >= 0");
    Eigen::VectorXd energies;
    Matrix vectors;
    eig_hermitian(realization.h_left_block, energies, vectors);
    const double e0 = energies.minCoeff();
    double z_shifted = 0.0;
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        z_shifted += std::exp(-beta * (energies(i) - e0));
    }
    ThermalConfig cfg;
    cfg.beta = beta;
    cfg.log_partition_function = std::log(z_shifted) - beta * e0;
    cfg.partition_function = std::exp(cfg.log_partition_function);
    return cfg;
}

StateVector thermofield_double(const SykRealization& realization, double beta) {
    if (beta < 0.0) throw ModelError("beta must be >= 0");
    Eigen::VectorXd energies;
    Matrix vectors;
    eig_hermitian(realization.h_left_block, energies, vectors);

    // Shift energies so the largest Boltzmann weight is 1.
    const double e0 = energies.minCoeff();
    Vector weights(energies.size());
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        weights(i) = std::exp(-0.5 * beta * (energies(i) - e0));
    }

    // Amplitude over (left, right) basis pairs: M = U diag(w) U^dag, with
    // the right index carrying the conjugated eigenvector.
    Matrix amp = vectors * weights.asDiagonal() * vectors.adjoint();

    const std::int64_t side_dim = amp.rows();
    Vector psi(side_dim * side_dim);
    for (std::int64_t a = 0; a < side_dim; ++a) {
        for (std::int64_t b = 0; b < side_dim; ++b) {
            psi(a * side_dim + b) = amp(a, b);
        }
    }
    psi /= psi.norm();
    return StateVector(std::move(psi));
}

StateVector prepare_initial_state(const StateVector& tfd,
                                  const RegisterLayout& layout) {
    if (!layout.has_protocol_qubits()) {
        throw LayoutError("prepare_initial_state requires protocol qubits");
    }
    const std::int64_t two_side_dim = std::int64_t{1} << (2 * layout.n_side_qubits());
    if (tfd.dim() != two_side_dim) {
        throw LayoutError("TFD dimension does not match layout side blocks");
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Vector psi = Vector::Zero(layout.total_dim());
    // Basis order [reference, message, left, right]: ref/msg occupy the two
    // most significant bits.
    for (std::int64_t s = 0; s < two_side_dim; ++s) {
        psi(s) = inv_sqrt2 * tfd.amplitudes(s);                      // |00>
        psi(3 * two_side_dim + s) = inv_sqrt2 * tfd.amplitudes(s);   // |11>
    }
    return StateVector(std::move(psi));
}

StateVector bell_target() {
    Vector psi = Vector::Zero(4);
    psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
    return StateVector(std::move(psi));
}

}  // namespace ptwh
