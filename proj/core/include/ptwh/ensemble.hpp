#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptwh/spectral.hpp"
#include "ptwh/stats.hpp"
#include "ptwh/teleport.hpp"

namespace ptwh {

/// Spectral side of an ensemble run: where to look for the transition
/// and how to filter the gamma_c samples.
struct SweepConfig {
    double gamma_bracket_max = 0.3;
    double bisection_tol = 1e-6;
    double filter_threshold = 0.015;
    double g_spectral = 0.0;  // g inside H_eff for gamma_c extraction
    std::vector<double> fidelity_gamma_grid;  // shared grid for fidelity stats
    double j_scale = 1.0;
    int n_majorana = 6;
};

struct RealizationRecord {
    std::uint64_t seed = 0;
    std::optional<double> gamma_c;  // absent: no transition in the window
    std::pair<int, int> pair_indices{-1, -1};
    double two_level_prediction = 0.0;  // Eq.-(10)-style weakest-link value
    std::vector<double> fidelities;     // on fidelity_gamma_grid
    std::string failure;                // non-empty: recorded and skipped
};

struct LogNormalFit {
    double mu = 0.0;
    double sigma = 0.0;
    double ks_lognormal = 0.0;  // KS statistic against the fitted log-normal
    double ks_normal = 0.0;     // KS statistic against a fitted normal
};

struct EnsembleResult {
    std::uint64_t base_seed = 0;
    std::vector<RealizationRecord> records;
    std::vector<double> gamma_c_samples;   // detected transitions only
    std::vector<double> filtered_samples;  // gamma_c > filter_threshold
    std::optional<LogNormalFit> lognormal_fit;             // on filtered samples
    std::optional<LogNormalFit> lognormal_fit_unfiltered;  // on all samples
    std::vector<double> fidelity_gamma_grid;
    std::vector<double> fidelity_mean;
    std::vector<double> fidelity_std;
    int n_realizations = 0;
    int n_failed = 0;
    int n_no_transition = 0;
};

/// Seeds derived as derive_seed(base_seed, i); per-realization gamma_c
/// via bisection plus per-gamma fidelities; fully reproducible. Failures
/// are recorded per realization, never silently dropped.
EnsembleResult run_ensemble(std::uint64_t base_seed, int n_realizations,
                            const ProtocolConfig& protocol,
                            const SweepConfig& sweep, int threads = 1);

/// Maximum-likelihood log-normal fit: mu = mean(ln x), sigma =
/// population std(ln x), with KS statistics against the fitted
/// log-normal and a fitted normal. Requires positive samples, >= 2.
LogNormalFit fit_lognormal(const std::vector<double>& samples);

/// Pointwise mean and std of per-realization fidelity sweeps sharing one
/// gamma grid.
void fidelity_statistics(const std::vector<std::vector<double>>& sweeps,
                         std::vector<double>& out_mean,
                         std::vector<double>& out_std);

struct SpacingReport {
    std::vector<double> normalized_spacings;  // unfolded, local-mean window 11
    double gap_ratio_mean = 0.0;              // r-bar from raw spacings
    Histogram histogram;
    bool diagnostic_only = false;  // spectrum < 20 levels
};

/// Level-spacing diagnostics of the Hermitian spectrum (gamma = 0).
SpacingReport spacing_statistics(const SykRealization& realization, double g);

/// Same diagnostics for an externally supplied level list (synthetic
/// spectra, aggregated pools). Sorting is internal.
SpacingReport spacing_report_from_levels(std::vector<double> levels);

}  // namespace ptwh
