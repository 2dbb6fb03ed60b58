#include "ptwh/syk.hpp"

#include <cmath>
#include <string>

#include "ptwh/errors.hpp"
#include "ptwh/pauli.hpp"
#include "ptwh/rng.hpp"

namespace ptwh {

SykCouplings sample_couplings(std::uint64_t seed, int n_modes, double j_scale) {
    if (n_modes < 4) {
        throw ModelError("N = " + std::to_string(n_modes) +
                         " admits no quartic terms (need N >= 4)");
    }
    if (n_modes % 2 != 0) {
        throw ModelError("N must be even, got " + std::to_string(n_modes));
    }
    if (!(j_scale > 0.0)) {
        throw ModelError("coupling scale J must be positive");
    }
    SykCouplings c;
    c.seed = seed;
    c.n_modes = n_modes;
    c.j_scale = j_scale;

    // <J^2> = J^2 (q-1)! / N^(q-1), q = 4.
    const double sigma =
        j_scale * std::sqrt(6.0 / (static_cast<double>(n_modes) * n_modes * n_modes));

    GaussianStream rng(seed);
    for (int i = 1; i <= n_modes; ++i) {
        for (int j = i + 1; j <= n_modes; ++j) {
            for (int k = j + 1; k <= n_modes; ++k) {
                for (int l = k + 1; l <= n_modes; ++l) {
                    c.values[{i, j, k, l}] = sigma * rng.gaussian();
                }
            }
        }
    }
    return c;
}

Matrix build_syk_block(const SykCouplings& couplings) {
    const int ns = couplings.n_modes / 2;
    const std::int64_t dim = std::int64_t{1} << ns;

    std::vector<Matrix> chi;
    chi.reserve(couplings.n_modes);
    for (int m = 1; m <= couplings.n_modes; ++m) {
        chi.push_back(jordan_wigner_majorana_block(ns, m));
    }

    Matrix h = Matrix::Zero(dim, dim);
    const double prefactor = -1.0 / 24.0;  // -1/q!
    for (const auto& [idx, j] : couplings.values) {
        if (j == 0.0) continue;
        h += (prefactor * j) *
             (chi[idx[0] - 1] * chi[idx[1] - 1] * chi[idx[2] - 1] * chi[idx[3] - 1]);
    }
    return h;
}

OperatorMatrix build_syk_hamiltonian(const SykCouplings& couplings, Side side,
                                     const RegisterLayout& layout) {
    if (layout.n_majorana_per_side() != couplings.n_modes) {
        throw LayoutError("layout mode count does not match couplings");
    }
    Matrix block = build_syk_block(couplings);
    return OperatorMatrix::hermitian_tagged(embed_block(
        layout, block, layout.side_block_start(side), layout.n_side_qubits()));
}

OperatorMatrix build_coupling_v(const RegisterLayout& layout) {
    const int ns = layout.n_side_qubits();
    const std::int64_t dim = layout.total_dim();
    Matrix v = Matrix::Zero(dim, dim);
    // Dirac pair i consumes Majoranas 2i-1 on each side; pair 1 carries the
    // message mode and is excluded from the coupling.
    for (int i = 2; i <= ns; ++i) {
        const int mode = 2 * i - 1;
        const int k = (mode + 1) / 2;
        std::map<int, Pauli> factors;
        for (int j = 1; j < k; ++j) {
            factors[layout.side_qubit(Side::left, j)] = Pauli::Z;
            factors[layout.side_qubit(Side::right, j)] = Pauli::Z;
        }
        factors[layout.side_qubit(Side::left, k)] = Pauli::X;
        factors[layout.side_qubit(Side::right, k)] = Pauli::X;
        v += 0.5 * (Matrix::Identity(dim, dim) + pauli_string(layout, factors).entries);
    }
    return OperatorMatrix::hermitian_tagged(std::move(v));
}

Eigen::VectorXd pt_sector_values(const RegisterLayout& layout) {
    const int ns = layout.n_side_qubits();
    const std::int64_t dim = layout.total_dim();
    Eigen::VectorXd delta = Eigen::VectorXd::Zero(dim);
    for (std::int64_t b = 0; b < dim; ++b) {
        int value = 0;
        for (int k = 1; k <= ns; ++k) {
            const auto u = static_cast<std::uint64_t>(b);
            const bool left_one =
                (u >> layout.bit_of(layout.side_qubit(Side::left, k))) & 1;
            const bool right_one =
                (u >> layout.bit_of(layout.side_qubit(Side::right, k))) & 1;
            value += (left_one ? -1 : 1) - (right_one ? -1 : 1);
        }
        delta(b) = value;
    }
    return delta;
}

OperatorMatrix build_pt_generator(const RegisterLayout& layout) {
    Eigen::VectorXd delta = pt_sector_values(layout);
    Matrix m = delta.cast<Complex>().asDiagonal();
    OperatorMatrix out(std::move(m));
    out.hermitian = true;
    return out;
}

OperatorMatrix lr_swap(const RegisterLayout& layout) {
    const std::int64_t dim = layout.total_dim();
    const int ns = layout.n_side_qubits();
    Matrix p = Matrix::Zero(dim, dim);
    for (std::int64_t col = 0; col < dim; ++col) {
        auto u = static_cast<std::uint64_t>(col);
        for (int k = 1; k <= ns; ++k) {
            const int bl = layout.bit_of(layout.side_qubit(Side::left, k));
            const int br = layout.bit_of(layout.side_qubit(Side::right, k));
            const bool vl = (u >> bl) & 1;
            const bool vr = (u >> br) & 1;
            if (vl != vr) u ^= (std::uint64_t{1} << bl) | (std::uint64_t{1} << br);
        }
        p(static_cast<std::int64_t>(u), col) = 1.0;
    }
    OperatorMatrix out(std::move(p));
    out.hermitian = true;
    return out;
}

SykRealization make_realization(std::uint64_t seed, const RegisterLayout& layout,
                                double j_scale, RightSideConvention convention) {
    SykRealization r{
        .couplings = sample_couplings(seed, layout.n_majorana_per_side(), j_scale),
        .layout = layout,
        .convention = convention,
    };
    r.h_left_block = build_syk_block(r.couplings);
    r.h_right_block = convention == RightSideConvention::conjugated
                          ? r.h_left_block.conjugate()
                          : r.h_left_block;
    r.h_left = OperatorMatrix::hermitian_tagged(
        embed_block(layout, r.h_left_block, layout.side_block_start(Side::left),
                    layout.n_side_qubits()));
    r.h_right = OperatorMatrix::hermitian_tagged(
        embed_block(layout, r.h_right_block, layout.side_block_start(Side::right),
                    layout.n_side_qubits()));
    r.coupling_v = build_coupling_v(layout);
    r.pt_generator = build_pt_generator(layout);
    return r;
}

OperatorMatrix assemble_h_eff(const SykRealization& realization, double g,
                              double gamma) {
    if (!std::isfinite(g) || !std::isfinite(gamma)) {
        throw NumericError("assemble_h_eff: non-finite parameters");
    }
    if (gamma < 0.0) {
        throw ModelError("gamma must be >= 0 (negative gamma swaps gain/loss sides)");
    }
    Matrix h = realization.h_left.entries + realization.h_right.entries +
               Complex{0.0, gamma} * realization.pt_generator.entries +
               g * realization.coupling_v.entries;
    OperatorMatrix out(std::move(h));
    out.hermitian = gamma == 0.0;
    return out;
}

}  // namespace ptwh
