#include "ptwh/pauli.hpp"

#include <string>

#include "ptwh/errors.hpp"

namespace ptwh {

namespace {

// Pauli strings are signed permutation matrices: column b maps to row
// b ^ flip_mask with a phase determined by the Z and Y factors at the
// column's bit pattern.
Matrix pauli_string_bits(int n_qubits, std::uint64_t x_mask, std::uint64_t y_mask,
                         std::uint64_t z_mask) {
    const std::int64_t dim = std::int64_t{1} << n_qubits;
    const std::uint64_t flip = x_mask | y_mask;
    Matrix m = Matrix::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        Complex amp{1.0, 0.0};
        for (int bit = 0; bit < n_qubits; ++bit) {
            const std::uint64_t sel = std::uint64_t{1} << bit;
            const bool one = (static_cast<std::uint64_t>(col) & sel) != 0;
            if (z_mask & sel) {
                if (one) amp = -amp;
            }
            if (y_mask & sel) {
                // Y|0> = i|1>,  Y|1> = -i|0>
                amp *= one ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
            }
        }
        const std::int64_t row =
            static_cast<std::int64_t>(static_cast<std::uint64_t>(col) ^ flip);
        m(row, col) = amp;
    }
    return m;
}

}  // namespace

OperatorMatrix pauli_string(const RegisterLayout& layout,
                            const std::map<int, Pauli>& factors) {
    std::uint64_t x_mask = 0, y_mask = 0, z_mask = 0;
    for (const auto& [qubit, p] : factors) {
        const std::uint64_t sel = std::uint64_t{1} << layout.bit_of(qubit);
        switch (p) {
            case Pauli::X: x_mask |= sel; break;
            case Pauli::Y: y_mask |= sel; break;
            case Pauli::Z: z_mask |= sel; break;
        }
    }
    OperatorMatrix result(
        pauli_string_bits(layout.total_qubits(), x_mask, y_mask, z_mask));
    result.hermitian = true;
    return result;
}

OperatorMatrix jordan_wigner_majorana(const RegisterLayout& layout, Side side,
                                      int mode_index) {
    if (mode_index < 1 || mode_index > layout.n_majorana_per_side()) {
        throw LayoutError("Majorana mode index " + std::to_string(mode_index) +
                          " out of range [1, " +
                          std::to_string(layout.n_majorana_per_side()) + "]");
    }
    const int k = (mode_index + 1) / 2;  // target qubit within the block, 1-based
    const bool odd = mode_index % 2 == 1;
    std::map<int, Pauli> factors;
    for (int j = 1; j < k; ++j) factors[layout.side_qubit(side, j)] = Pauli::Z;
    factors[layout.side_qubit(side, k)] = odd ? Pauli::X : Pauli::Y;
    return pauli_string(layout, factors);
}

Matrix jordan_wigner_majorana_block(int n_block_qubits, int mode_index) {
    if (mode_index < 1 || mode_index > 2 * n_block_qubits) {
        throw LayoutError("Majorana mode index " + std::to_string(mode_index) +
                          " out of range for " + std::to_string(n_block_qubits) +
                          "-qubit block");
    }
    const int k = (mode_index + 1) / 2;
    const bool odd = mode_index % 2 == 1;
    std::uint64_t x_mask = 0, y_mask = 0, z_mask = 0;
    for (int j = 1; j < k; ++j) z_mask |= std::uint64_t{1} << (n_block_qubits - j);
    const std::uint64_t sel = std::uint64_t{1} << (n_block_qubits - k);
    (odd ? x_mask : y_mask) |= sel;
    return pauli_string_bits(n_block_qubits, x_mask, y_mask, z_mask);
}

Matrix embed_block(const RegisterLayout& layout, const Matrix& block,
                   int first_qubit, int n_block_qubits) {
    layout.check_qubit(first_qubit);
    layout.check_qubit(first_qubit + n_block_qubits - 1);
    const std::int64_t block_dim = std::int64_t{1} << n_block_qubits;
    if (block.rows() != block_dim || block.cols() != block_dim) {
        throw LayoutError("block dimension does not match qubit count");
    }
    const int n_total = layout.total_qubits();
    const int n_low = n_total - (first_qubit + n_block_qubits);  // qubits after the block
    const std::int64_t low_dim = std::int64_t{1} << n_low;
    const std::int64_t high_dim = layout.total_dim() / (block_dim * low_dim);

    Matrix full = Matrix::Zero(layout.total_dim(), layout.total_dim());
    for (std::int64_t h = 0; h < high_dim; ++h) {
        for (std::int64_t r = 0; r < block_dim; ++r) {
            for (std::int64_t c = 0; c < block_dim; ++c) {
                const Complex v = block(r, c);
                if (v == Complex{0.0, 0.0}) continue;
                const std::int64_t row_base = (h * block_dim + r) * low_dim;
                const std::int64_t col_base = (h * block_dim + c) * low_dim;
                for (std::int64_t l = 0; l < low_dim; ++l) {
                    full(row_base + l, col_base + l) = v;
                }
            }
        }
    }
    return full;
}

OperatorMatrix swap_gate(const RegisterLayout& layout, int qubit_a, int qubit_b) {
    const std::uint64_t ba = std::uint64_t{1} << layout.bit_of(qubit_a);
    const std::uint64_t bb = std::uint64_t{1} << layout.bit_of(qubit_b);
    const std::int64_t dim = layout.total_dim();
    Matrix m = Matrix::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        const auto u = static_cast<std::uint64_t>(col);
        const bool va = (u & ba) != 0;
        const bool vb = (u & bb) != 0;
        std::uint64_t row = u;
        if (va != vb) row ^= ba | bb;
        m(static_cast<std::int64_t>(row), col) = 1.0;
    }
    OperatorMatrix result{std::move(m)};
    result.hermitian = true;
    return result;
}

}  // namespace ptwh
