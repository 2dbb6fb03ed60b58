#pragma once

#include <cstdint>

namespace ptwh {

enum class Side { left, right };

/// Maps Majorana modes and protocol qubits onto a single tensor-product
/// register and owns all dimension bookkeeping.
///
/// Qubit ordering is big-endian role order:
///   [reference, message, left block, right block]   (protocol layouts)
///   [left block, right block]                       (spectral-only layouts)
/// Qubit 0 is the most significant bit of a basis index.
class RegisterLayout {
public:
    /// Two-sided layout without protocol qubits (dim 2^N).
    static RegisterLayout spectral(int n_majorana_per_side);

    /// Two-sided layout plus reference and message qubits (dim 2^(N+2)).
    static RegisterLayout protocol(int n_majorana_per_side);

    int n_majorana_per_side() const { return n_majorana_; }
    int n_side_qubits() const { return n_majorana_ / 2; }
    bool has_protocol_qubits() const { return protocol_; }

    int total_qubits() const {
        return 2 * n_side_qubits() + (protocol_ ? 2 : 0);
    }
    std::int64_t total_dim() const { return std::int64_t{1} << total_qubits(); }

    /// Throws LayoutError on spectral-only layouts.
    int reference_qubit() const;
    int message_qubit() const;

    /// First qubit of a side block.
    int side_block_start(Side side) const;

    /// k-th qubit of a side block, k in [1, n_side_qubits].
    int side_qubit(Side side, int k) const;

    /// Bit position (from the least significant end) of qubit `q` in a
    /// basis index, under the big-endian convention.
    int bit_of(int qubit) const;

    /// Validates a qubit index; throws LayoutError when out of range.
    void check_qubit(int qubit) const;

    bool operator==(const RegisterLayout&) const = default;

private:
    RegisterLayout(int n_majorana, bool protocol);

    int n_majorana_;
    bool protocol_;
};

}  // namespace ptwh
