#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ptwh/matrix.hpp"
#include "ptwh/syk.hpp"

namespace ptwh {

enum class PhaseLabel { exact_pt, broken_pt };

/// exact_pt iff max_i |Im lambda_i| < epsilon_imag * ||H||.
PhaseLabel classify_phase(const Spectrum& spectrum, double epsilon_imag = 1e-9);

/// Eigenvalue trajectories over a gamma grid with level-tracking
/// continuity. Trajectory index j starts from the deterministic sorted
/// order at the first grid point; tracking is greedy nearest-neighbor
/// matching in the complex plane, refining the step internally when the
/// matching looks ambiguous.
struct SpectralSweep {
    std::vector<double> gamma_grid;
    std::vector<std::vector<Complex>> trajectories;  // [level][grid index]
    std::vector<PhaseLabel> phase_labels;            // per grid point
    std::optional<double> detected_gamma_c;  // midpoint of first flip interval
    double epsilon_imag = 1e-9;
};

/// Two-level projection of the full Hamiltonian onto eigenstates n, m of
/// H_0 = H_L + H_R + gV, with v = <n|V_PT|m>.
struct TwoLevelModel {
    double e_n = 0.0;
    double e_m = 0.0;
    Complex v{};
    std::pair<int, int> pair_indices{0, 0};
    double diag_n = 0.0;  // <n|V_PT|n>
    double diag_m = 0.0;  // <m|V_PT|m>
};

enum class EpMethod { bisection_full_ed, two_level_formula };

struct EpEstimate {
    double gamma_c = 0.0;
    std::pair<int, int> pair_indices{-1, -1};
    EpMethod method = EpMethod::bisection_full_ed;
    double bracket_width = 0.0;
    std::optional<double> cusp_exponent;
    bool multiple_coalescence = false;
};

/// Parameterized Hamiltonian assembly, gamma -> H(gamma). Lets the
/// spectral machinery run on synthetic models as well as SYK
/// realizations.
using HamiltonianFn = std::function<OperatorMatrix(double)>;

std::vector<double> linspace(double lo, double hi, int n);

SpectralSweep sweep_spectrum(const HamiltonianFn& hamiltonian,
                             const std::vector<double>& gamma_grid,
                             double epsilon_imag = 1e-9);
SpectralSweep sweep_spectrum(const SykRealization& realization, double g,
                             const std::vector<double>& gamma_grid);

/// Bisection on the broken-phase indicator. pre: phase(lo) = exact_pt,
/// phase(hi) = broken_pt. Returns the midpoint of the final bracket and
/// the H_0 eigenindices of the first pair to acquire imaginary parts.
EpEstimate find_critical_gamma(const HamiltonianFn& hamiltonian,
                               std::pair<double, double> bracket,
                               double tol = 1e-6, double epsilon_imag = 1e-9);
EpEstimate find_critical_gamma(const SykRealization& realization, double g,
                               std::pair<double, double> bracket,
                               double tol = 1e-6);

TwoLevelModel two_level_reduce(const SykRealization& realization, double g,
                               std::pair<int, int> pair);

/// Closed-form eigenvalues of the projected two-level Hamiltonian,
/// lambda+- = (E_n + E_m)/2 +- sqrt(((E_n - E_m)/2)^2 - (gamma |v|)^2).
std::pair<Complex, Complex> two_level_eigenvalues(const TwoLevelModel& model,
                                                  double gamma);

/// gamma_c = |E_n - E_m| / (2 |v|).
double two_level_critical_gamma(const TwoLevelModel& model);

/// Pair with the globally minimal |E_n - E_m| / (2 |v_nm|) ratio; the
/// predicted first coalescence ("weakest link"). Used to seed brackets.
std::pair<int, int> weakest_link_pair(const SykRealization& realization, double g);

/// Least-squares slope of log dE vs log(gamma_c - gamma) over the window
/// (gamma_c - 0.2 gamma_c, gamma_c); needs >= 8 resolved grid points.
double fit_cusp_exponent(const SpectralSweep& sweep, std::pair<int, int> pair,
                         double gamma_c);

/// Fitted quadratic coefficient of dE(gamma) - dE_0 in the perturbative
/// regime; equals -2 v^2 / dE_0 for the closed-form model.
double gap_attraction_coefficient(const TwoLevelModel& model, double gamma_small);

/// Quadratic coefficient fit for externally supplied gap data
/// (gamma_j, dE_j); used for full-ED level-attraction checks.
double fit_gap_quadratic_coefficient(const std::vector<double>& gammas,
                                     const std::vector<double>& gaps,
                                     double gap0);

}  // namespace ptwh
