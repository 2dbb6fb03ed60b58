#include "ptwh/layout.hpp"

#include <string>

#include "ptwh/errors.hpp"

namespace ptwh {

RegisterLayout::RegisterLayout(int n_majorana, bool protocol)
    : n_majorana_(n_majorana), protocol_(protocol) {
    if (n_majorana < 4 || n_majorana % 2 != 0) {
        throw LayoutError("n_majorana_per_side must be even and >= 4, got " +
                          std::to_string(n_majorana));
    }
    if (total_qubits() > 24) {
        throw LayoutError("register too large for dense storage: " +
                          std::to_string(total_qubits()) + " qubits");
    }
}

RegisterLayout RegisterLayout::spectral(int n_majorana_per_side) {
    return RegisterLayout(n_majorana_per_side, false);
}

RegisterLayout RegisterLayout::protocol(int n_majorana_per_side) {
    return RegisterLayout(n_majorana_per_side, true);
}

int RegisterLayout::reference_qubit() const {
    if (!protocol_) throw LayoutError("layout has no reference qubit");
    return 0;
}

int RegisterLayout::message_qubit() const {
    if (!protocol_) throw LayoutError("layout has no message qubit");
    return 1;
}

int RegisterLayout::side_block_start(Side side) const {
    const int base = protocol_ ? 2 : 0;
    return side == Side::left ? base : base + n_side_qubits();
}

int RegisterLayout::side_qubit(Side side, int k) const {
    if (k < 1 || k > n_side_qubits()) {
        throw LayoutError("side qubit index " + std::to_string(k) +
                          " out of range [1, " + std::to_string(n_side_qubits()) + "]");
    }
    return side_block_start(side) + (k - 1);
}

int RegisterLayout::bit_of(int qubit) const {
    check_qubit(qubit);
    return total_qubits() - 1 - qubit;
}

void RegisterLayout::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= total_qubits()) {
        throw LayoutError("qubit index " + std::to_string(qubit) +
                          " out of range for " + std::to_string(total_qubits()) +
                          "-qubit register");
    }
}

}  // namespace ptwh
