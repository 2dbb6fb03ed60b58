#pragma once

#include <map>

#include "ptwh/layout.hpp"
#include "ptwh/matrix.hpp"

namespace ptwh {

enum class Pauli { X, Y, Z };

/// Tensor product of single-qubit Pauli factors, identity on unlisted
/// qubits. Hermitian and unitary by construction.
OperatorMatrix pauli_string(const RegisterLayout& layout,
                            const std::map<int, Pauli>& factors);

/// Jordan-Wigner Majorana operator chi_{side,mode}, mode in [1, N].
/// Strings are confined to the side's own qubit block: mode 2k-1 maps to
/// Z...Z X (k-1 Z's) and mode 2k to Z...Z Y on the block, so operators on
/// opposite sides commute. Hermitian with chi^2 = I.
OperatorMatrix jordan_wigner_majorana(const RegisterLayout& layout, Side side,
                                      int mode_index);

/// Same string on a standalone block register of `n_block_qubits`
/// (used to build side-local Hamiltonians at block dimension).
Matrix jordan_wigner_majorana_block(int n_block_qubits, int mode_index);

/// Embeds a block operator acting on qubits [first_qubit,
/// first_qubit + n_block_qubits) into the full register (identity
/// elsewhere).
Matrix embed_block(const RegisterLayout& layout, const Matrix& block,
                   int first_qubit, int n_block_qubits);

/// SWAP gate between two qubits of the register.
OperatorMatrix swap_gate(const RegisterLayout& layout, int qubit_a, int qubit_b);

}  // namespace ptwh
