#include "ptwh/teleport.hpp"

#include <cmath>
#include <string>

#include "ptwh/errors.hpp"
#include "ptwh/linalg.hpp"
#include "ptwh/parallel.hpp"
#include "ptwh/state_prep.hpp"
#include "ptwh/stats.hpp"

namespace ptwh {

namespace {

constexpr double kOverflowExponent = 700.0;

/// In-place application of a block operator on qubits
/// [first_qubit, first_qubit + n_block_qubits).
void apply_block(Vector& psi, const Matrix& block, int first_qubit,
                 int n_block_qubits, const RegisterLayout& layout) {
    const int n_total = layout.total_qubits();
    const std::int64_t block_dim = std::int64_t{1} << n_block_qubits;
    const int n_low = n_total - (first_qubit + n_block_qubits);
    const std::int64_t low_dim = std::int64_t{1} << n_low;
    const std::int64_t high_dim = layout.total_dim() / (block_dim * low_dim);

    Vector scratch(block_dim);
    for (std::int64_t h = 0; h < high_dim; ++h) {
        for (std::int64_t l = 0; l < low_dim; ++l) {
            const std::int64_t base = h * block_dim * low_dim + l;
            for (std::int64_t b = 0; b < block_dim; ++b) {
                scratch(b) = psi(base + b * low_dim);
            }
            scratch = (block * scratch).eval();
            for (std::int64_t b = 0; b < block_dim; ++b) {
                psi(base + b * low_dim) = scratch(b);
            }
        }
    }
}

Matrix phase_rotated(const Matrix& vectors, const Eigen::VectorXd& energies,
                     Complex scale) {
    Vector d(energies.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::exp(scale * energies(i));
    return vectors * d.asDiagonal() * vectors.adjoint();
}

double bell_overlap(const DensityMatrix& rho) {
    // <Phi+|rho|Phi+> over the 2-qubit (reference, readout) space.
    const Complex val =
        0.5 * (rho.entries(0, 0) + rho.entries(3, 3) + rho.entries(0, 3) +
               rho.entries(3, 0));
    return val.real();
}

std::map<int, double> sector_weights_of(const Vector& amplitudes,
                                        const Eigen::VectorXd& pt_diagonal) {
    std::map<int, double> weights;
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
        const double w = std::norm(amplitudes(i));
        if (w == 0.0) continue;
        weights[static_cast<int>(std::lround(pt_diagonal(i)))] += w;
    }
    return weights;
}

}  // namespace

ProtocolEngine::ProtocolEngine(const SykRealization& realization,
                               const ProtocolConfig& config)
    : layout_(realization.layout),
      insert_qubit_(config.insert_qubit),
      readout_qubit_(config.readout_qubit) {
    if (!layout_.has_protocol_qubits()) {
        throw LayoutError("protocol runs need a layout with protocol qubits");
    }
    layout_.side_qubit(Side::left, insert_qubit_);    // validates
    layout_.side_qubit(Side::right, readout_qubit_);  // validates
    if (config.t < 0.0 || config.gamma < 0.0) {
        throw ModelError("t and gamma must be >= 0");
    }

    eig_hermitian(realization.h_left_block, left_energies_, left_vectors_);
    eig_hermitian(realization.h_right_block, right_energies_, right_vectors_);

    // The two-sided coupling at block dimension (identical construction,
    // no protocol qubits).
    const RegisterLayout side_layout =
        RegisterLayout::spectral(layout_.n_majorana_per_side());
    const OperatorMatrix v_block = build_coupling_v(side_layout);
    Eigen::SelfAdjointEigenSolver<Matrix> es(v_block.entries);
    v_eigenvalues_ = es.eigenvalues();
    v_vectors_ = es.eigenvectors();

    pt_diagonal_ = pt_sector_values(layout_);
    initial_state_ =
        prepare_initial_state(thermofield_double(realization, config.beta), layout_);
}

StateVector ProtocolEngine::state_after_gate(double g, double t) const {
    Vector psi = initial_state_.amplitudes;
    const int ns = layout_.n_side_qubits();
    const int left_start = layout_.side_block_start(Side::left);

    // Backward left evolution.
    apply_block(psi, phase_rotated(left_vectors_, left_energies_, Complex{0.0, t}),
                left_start, ns, layout_);

    // Insert: SWAP(message, left insert qubit).
    {
        const std::uint64_t ba =
            std::uint64_t{1} << layout_.bit_of(layout_.message_qubit());
        const std::uint64_t bb =
            std::uint64_t{1}
            << layout_.bit_of(layout_.side_qubit(Side::left, insert_qubit_));
        Vector swapped(psi.size());
        for (std::int64_t i = 0; i < psi.size(); ++i) {
            auto u = static_cast<std::uint64_t>(i);
            const bool va = (u & ba) != 0;
            const bool vb = (u & bb) != 0;
            if (va != vb) u ^= ba | bb;
            swapped(static_cast<std::int64_t>(u)) = psi(i);
        }
        psi = std::move(swapped);
    }

    // Forward left evolution.
    apply_block(psi, phase_rotated(left_vectors_, left_energies_, Complex{0.0, -t}),
                left_start, ns, layout_);

    // Two-sided coupling gate e^(i g V).
    apply_block(psi, phase_rotated(v_vectors_, v_eigenvalues_, Complex{0.0, g}),
                left_start, 2 * ns, layout_);

    return StateVector(std::move(psi));
}

StateVector ProtocolEngine::final_state(double g, double t) const {
    StateVector mid = state_after_gate(g, t);
    Vector psi = std::move(mid.amplitudes);
    apply_block(psi, phase_rotated(right_vectors_, right_energies_, Complex{0.0, -t}),
                layout_.side_block_start(Side::right), layout_.n_side_qubits(),
                layout_);
    return StateVector(std::move(psi));
}

TeleportResult ProtocolEngine::evaluate_with_final(const StateVector& final,
                                                   double gamma, double t) const {
    TeleportResult result;
    result.initial_sector_weights = sector_weights_of(final.amplitudes, pt_diagonal_);

    // Gain re-weighting with overflow guard.
    const double delta_max = pt_diagonal_.maxCoeff();
    const double top_exponent = gamma * t * delta_max;
    const double offset = top_exponent > kOverflowExponent ? top_exponent : 0.0;
    Vector gained = final.amplitudes;
    for (Eigen::Index i = 0; i < gained.size(); ++i) {
        gained(i) *= std::exp(gamma * t * pt_diagonal_(i) - offset);
    }

    const double rescaled_norm2 = gained.squaredNorm();
    const double log_norm2 = std::log(rescaled_norm2) + 2.0 * offset;
    result.log10_success_probability = log_norm2 / std::log(10.0);
    result.success_probability = std::exp(log_norm2);

    const double post_scale = std::exp(2.0 * offset);
    for (const auto& [delta, w] : sector_weights_of(gained, pt_diagonal_)) {
        result.sector_weights[delta] = w * post_scale;
    }

    StateVector out(std::move(gained));
    result.output_state = out.normalized();

    const DensityMatrix rho = partial_trace(
        result.output_state,
        {layout_.reference_qubit(), layout_.side_qubit(Side::right, readout_qubit_)},
        layout_);
    result.fidelity = bell_overlap(rho);
    return result;
}

TeleportResult ProtocolEngine::evaluate(double g, double t, double gamma) const {
    return evaluate_with_final(final_state(g, t), gamma, t);
}

OperatorMatrix wormhole_unitary(const SykRealization& realization, double g,
                                double t, int insert_qubit) {
    if (!std::isfinite(g) || !std::isfinite(t)) {
        throw NumericError("wormhole_unitary: non-finite parameters");
    }
    const RegisterLayout& layout = realization.layout;
    const Matrix back_l = matrix_exponential(realization.h_left, Complex{0.0, t}).entries;
    const Matrix fwd_l = matrix_exponential(realization.h_left, Complex{0.0, -t}).entries;
    const Matrix fwd_r = matrix_exponential(realization.h_right, Complex{0.0, -t}).entries;
    const Matrix gate = matrix_exponential(realization.coupling_v, Complex{0.0, g}).entries;
    const Matrix insert =
        swap_gate(layout, layout.message_qubit(),
                  layout.side_qubit(Side::left, insert_qubit)).entries;
    return OperatorMatrix(fwd_r * gate * fwd_l * insert * back_l);
}

StateVector apply_pt_gain(const StateVector& state,
                          const OperatorMatrix& pt_generator, double gamma,
                          double t) {
    if (state.dim() != pt_generator.dim()) {
        throw LayoutError("state dimension does not match V_PT");
    }
    double delta_max = 0.0;
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        delta_max = std::max(delta_max, pt_generator.entries(i, i).real());
    }
    const double top_exponent = gamma * t * delta_max;
    const double offset = top_exponent > kOverflowExponent ? top_exponent : 0.0;

    StateVector out;
    out.amplitudes = state.amplitudes;
    for (std::int64_t i = 0; i < state.dim(); ++i) {
        out.amplitudes(i) *=
            std::exp(gamma * t * pt_generator.entries(i, i).real() - offset);
    }
    out.norm_squared = out.amplitudes.squaredNorm();
    out.log_offset = state.log_offset + offset;
    return out;
}

TeleportResult run_protocol(const SykRealization& realization,
                            const ProtocolConfig& config) {
    ProtocolEngine engine(realization, config);
    if (config.evolution_mode == EvolutionMode::factorized) {
        return engine.evaluate(config.g, config.t, config.gamma);
    }

    // Full mode: the right-evolution and gain factors are replaced by
    // e^(-i H_eff t). V_PT does not commute with H_L + H_R, so this
    // differs from the factorized protocol; it is kept for comparison
    // with the spectral analysis. Sector bookkeeping reduces to the
    // evolved-state weights (no separate gain stage).
    const StateVector mid = engine.state_after_gate(config.g, config.t);
    const OperatorMatrix u = matrix_exponential(
        assemble_h_eff(realization, config.g, config.gamma),
        Complex{0.0, -config.t});
    StateVector evolved(u.entries * mid.amplitudes);
    return engine.evaluate_with_final(evolved, 0.0, config.t);
}

double success_probability(const TeleportResult& result) {
    return result.success_probability;
}

double fidelity_gamma_derivative_check(const SykRealization& realization,
                                       const ProtocolConfig& config,
                                       double dgamma) {
    if (!(dgamma > 0.0)) throw StepError("dgamma must be positive");
    ProtocolEngine engine(realization, config);
    const StateVector final = engine.final_state(config.g, config.t);
    auto fidelity_at = [&](double gamma) {
        return engine.evaluate_with_final(final, gamma, config.t).fidelity;
    };
    auto derivative = [&](double h) {
        if (config.gamma - h >= 0.0) {
            return (fidelity_at(config.gamma + h) - fidelity_at(config.gamma - h)) /
                   (2.0 * h);
        }
        return (fidelity_at(config.gamma + h) - fidelity_at(config.gamma)) / h;
    };
    const double d1 = derivative(dgamma);
    const double d2 = derivative(dgamma / 2.0);
    const double d3 = derivative(dgamma / 4.0);
    if (std::abs(d3 - d2) > std::abs(d2 - d1) + 1e-12) {
        throw StepError("finite-difference step does not converge under halving");
    }
    return d3;
}

double purification_limit_fidelity(const SykRealization& realization,
                                   const ProtocolConfig& config) {
    ProtocolEngine engine(realization, config);
    const StateVector final = engine.final_state(config.g, config.t);
    const Eigen::VectorXd delta = pt_sector_values(realization.layout);

    double top = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < final.dim(); ++i) {
        if (std::norm(final.amplitudes(i)) > 0.0) top = std::max(top, delta(i));
    }
    if (!std::isfinite(top)) throw NumericError("final state has zero norm");

    Vector projected = final.amplitudes;
    for (Eigen::Index i = 0; i < projected.size(); ++i) {
        if (delta(i) != top) projected(i) = Complex{0.0, 0.0};
    }
    StateVector out(std::move(projected));
    const DensityMatrix rho =
        partial_trace(out.normalized(),
                      {engine.layout().reference_qubit(),
                       engine.layout().side_qubit(Side::right, config.readout_qubit)},
                      engine.layout());
    return bell_overlap(rho);
}

HeatmapTable temporal_heatmap(const std::vector<SykRealization>& realizations,
                              double g, const std::vector<double>& t_grid,
                              const std::vector<double>& gamma_grid,
                              const ProtocolConfig& base_config, int threads) {
    if (realizations.empty() || t_grid.empty() || gamma_grid.empty()) {
        throw ModelError("temporal_heatmap: empty realization set or grid");
    }
    const int nr = static_cast<int>(realizations.size());
    const int nt = static_cast<int>(t_grid.size());
    const int ng = static_cast<int>(gamma_grid.size());

    std::vector<Eigen::MatrixXd> cube(nr);
    parallel_for(nr, threads, [&](std::size_t r) {
        ProtocolEngine engine(realizations[r], base_config);
        Eigen::MatrixXd fid(nt, ng);
        for (int ti = 0; ti < nt; ++ti) {
            const StateVector final = engine.final_state(g, t_grid[ti]);
            for (int gi = 0; gi < ng; ++gi) {
                fid(ti, gi) =
                    engine.evaluate_with_final(final, gamma_grid[gi], t_grid[ti])
                        .fidelity;
            }
        }
        cube[r] = std::move(fid);
    });

    HeatmapTable table;
    table.t_grid = t_grid;
    table.gamma_grid = gamma_grid;
    table.n_realizations = nr;
    table.mean_fidelity.setZero(nt, ng);
    table.std_fidelity.setZero(nt, ng);
    for (const auto& fid : cube) table.mean_fidelity += fid;
    table.mean_fidelity /= nr;
    for (const auto& fid : cube) {
        table.std_fidelity += (fid - table.mean_fidelity).cwiseAbs2();
    }
    table.std_fidelity = (table.std_fidelity / nr).cwiseSqrt();

    table.peak_time.resize(ng);
    for (int gi = 0; gi < ng; ++gi) {
        Eigen::Index best = 0;
        table.mean_fidelity.col(gi).maxCoeff(&best);
        table.peak_time[gi] = t_grid[best];
    }
    return table;
}

}  // namespace ptwh
