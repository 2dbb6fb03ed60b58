#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "ptwh/layout.hpp"
#include "ptwh/matrix.hpp"

namespace ptwh {

/// One seeded draw of the Gaussian quartic couplings J_{ijkl}.
/// Mode indices are 1-based and strictly increasing within each key.
struct SykCouplings {
    std::uint64_t seed = 0;
    int n_modes = 0;       // N, modes per side
    int q = 4;             // interaction order (fixed)
    double j_scale = 1.0;  // overall coupling scale J
    std::map<std::array<int, 4>, double> values;
};

/// i.i.d. Gaussian couplings, mean 0, std dev J*sqrt((q-1)!/N^(q-1)) with
/// q = 4. Deterministic under seed.
SykCouplings sample_couplings(std::uint64_t seed, int n_modes, double j_scale);

/// Side Hamiltonian at block dimension 2^(N/2):
///   H = -(1/q!) sum_{i<j<k<l} J_{ijkl} chi_i chi_j chi_k chi_l
Matrix build_syk_block(const SykCouplings& couplings);

/// Side Hamiltonian embedded in the full register (identity elsewhere).
OperatorMatrix build_syk_hamiltonian(const SykCouplings& couplings, Side side,
                                     const RegisterLayout& layout);

/// Two-sided coupling V = sum_{i=2}^{N/2} n_i where each n_i is the
/// cross-side projector (I + chi_{L,2i-1} chi_{R,2i-1})/2. Hermitian with
/// integer eigenvalues in [0, N/2 - 1]. Under the side-local
/// Jordan-Wigner convention the cross-side string product is itself
/// Hermitian with square I, so the projector carries no extra phase.
OperatorMatrix build_coupling_v(const RegisterLayout& layout);

/// Gain/loss generator V_PT = sum_k (Z_L^(k) - Z_R^(k)). Diagonal in the
/// computational basis with even-integer eigenvalues in [-N, N].
OperatorMatrix build_pt_generator(const RegisterLayout& layout);

/// Diagonal of V_PT as a plain vector (delta_k per basis state).
Eigen::VectorXd pt_sector_values(const RegisterLayout& layout);

/// Left<->right block swap (the parity P of the PT operation). Leaves
/// protocol qubits in place.
OperatorMatrix lr_swap(const RegisterLayout& layout);

enum class RightSideConvention {
    conjugated,  // H_R = conj(H_L) on its own block (default)
    identical,   // H_R = H_L on its own block (sensitivity checks)
};

/// One disorder realization with its assembled operators.
struct SykRealization {
    SykCouplings couplings;
    RegisterLayout layout;
    RightSideConvention convention = RightSideConvention::conjugated;
    Matrix h_left_block;   // side Hamiltonian at block dimension
    Matrix h_right_block;
    OperatorMatrix h_left;  // full-register operators
    OperatorMatrix h_right;
    OperatorMatrix coupling_v;
    OperatorMatrix pt_generator;
};

SykRealization make_realization(
    std::uint64_t seed, const RegisterLayout& layout, double j_scale = 1.0,
    RightSideConvention convention = RightSideConvention::conjugated);

/// H_eff = H_L + H_R + i*gamma*V_PT + g*V. Hermitian iff gamma = 0.
OperatorMatrix assemble_h_eff(const SykRealization& realization, double g,
                              double gamma);

}  // namespace ptwh
