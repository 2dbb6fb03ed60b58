#pragma once

#include <map>
#include <vector>

#include "ptwh/matrix.hpp"
#include "ptwh/syk.hpp"

namespace ptwh {

enum class EvolutionMode { factorized, full };

struct ProtocolConfig {
    double g = 1.0;       // coupling strength
    double t = 10.0;      // evolution time, 1/J units
    double gamma = 0.0;   // non-Hermiticity
    double beta = 4.0;    // inverse temperature
    EvolutionMode evolution_mode = EvolutionMode::factorized;
    int insert_qubit = 1;   // left block qubit receiving the message (1-based)
    int readout_qubit = 1;  // right block qubit read out (1-based)
};

struct TeleportResult {
    double fidelity = 0.0;                 // <Phi+| rho_out |Phi+>
    double success_probability = 0.0;      // <psi~|psi~> before normalization
    double log10_success_probability = 0.0;
    StateVector output_state;              // normalized
    // Post-gain unnormalized weights per V_PT eigenvalue delta; they sum
    // to success_probability.
    std::map<int, double> sector_weights;
    // Pre-gain |a_k|^2 sums per sector; sum_delta w(delta) e^(2 gamma t
    // delta) recomputes success_probability.
    std::map<int, double> initial_sector_weights;
};

/// U_wh = e^(-i H_R t) e^(i g V) e^(-i H_L t) I_insert e^(+i H_L t),
/// with the insert operator a SWAP between the message qubit and the
/// chosen left qubit. Unitary within 1e-10.
OperatorMatrix wormhole_unitary(const SykRealization& realization, double g,
                                double t, int insert_qubit = 1);

/// Multiplies each computational-basis amplitude by e^(gamma t delta).
/// Returns an unnormalized state; when gamma*t*delta_max > 700 the
/// amplitudes are rescaled by e^(-gamma t delta_max) and the offset is
/// recorded in StateVector::log_offset.
StateVector apply_pt_gain(const StateVector& state,
                          const OperatorMatrix& pt_generator, double gamma,
                          double t);

TeleportResult run_protocol(const SykRealization& realization,
                            const ProtocolConfig& config);

/// <psi~|psi~> of the pre-normalization state.
double success_probability(const TeleportResult& result);

/// Central finite difference of fidelity in gamma. Throws StepError when
/// halving the step does not converge.
double fidelity_gamma_derivative_check(const SykRealization& realization,
                                       const ProtocolConfig& config,
                                       double dgamma);

/// Analytic gamma*t -> infinity fidelity: the Bell overlap of the state
/// projected onto the maximal occupied V_PT sector.
double purification_limit_fidelity(const SykRealization& realization,
                                   const ProtocolConfig& config);

struct HeatmapTable {
    std::vector<double> t_grid;
    std::vector<double> gamma_grid;
    // mean_fidelity(ti, gi), std_fidelity(ti, gi)
    Eigen::MatrixXd mean_fidelity;
    Eigen::MatrixXd std_fidelity;
    int n_realizations = 0;
    std::vector<double> peak_time;  // per gamma: argmax_t of mean fidelity
};

/// Disorder-averaged fidelity over a (t, gamma) grid at fixed g.
HeatmapTable temporal_heatmap(const std::vector<SykRealization>& realizations,
                              double g, const std::vector<double>& t_grid,
                              const std::vector<double>& gamma_grid,
                              const ProtocolConfig& base_config, int threads = 1);

/// Precomputed eigenbases for one realization; makes repeated protocol
/// runs over (g, t, gamma) grids cheap. The wormhole stage is gamma
/// independent, so a cached final state serves a whole gamma sweep.
class ProtocolEngine {
public:
    ProtocolEngine(const SykRealization& realization, const ProtocolConfig& config);

    /// State after the coupling gate, before the right evolution.
    StateVector state_after_gate(double g, double t) const;

    /// Final state of the Hermitian wormhole stage (pre-gain).
    StateVector final_state(double g, double t) const;

    /// Full result at this engine's (beta, insert, readout) and the given
    /// (g, t, gamma).
    TeleportResult evaluate(double g, double t, double gamma) const;

    /// Gain + normalization + fidelity on a cached final state.
    TeleportResult evaluate_with_final(const StateVector& final, double gamma,
                                       double t) const;

    const RegisterLayout& layout() const { return layout_; }

private:
    RegisterLayout layout_;
    int insert_qubit_;
    int readout_qubit_;
    Eigen::VectorXd left_energies_, right_energies_;
    Matrix left_vectors_, right_vectors_;
    Eigen::VectorXd v_eigenvalues_;
    Matrix v_vectors_;
    Eigen::VectorXd pt_diagonal_;
    StateVector initial_state_;
};

}  // namespace ptwh
