#include "ptwh/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "ptwh/errors.hpp"
#include "ptwh/linalg.hpp"
#include "ptwh/parallel.hpp"
#include "ptwh/rng.hpp"

namespace ptwh {

LogNormalFit fit_lognormal(const std::vector<double>& samples) {
    if (samples.size() < 2) throw DomainError("fit_lognormal needs >= 2 samples");
    std::vector<double> logs;
    logs.reserve(samples.size());
    for (double x : samples) {
        if (!(x > 0.0)) throw DomainError("fit_lognormal: non-positive sample");
        logs.push_back(std::log(x));
    }
    LogNormalFit fit;
    fit.mu = mean(logs);
    fit.sigma = population_std(logs);

    const double mu = fit.mu, sigma = fit.sigma;
    fit.ks_lognormal = ks_statistic(samples, [mu, sigma](double x) {
        return x <= 0.0 ? 0.0 : normal_cdf(std::log(x), mu, sigma);
    });
    const double nm = mean(samples);
    const double ns = population_std(samples);
    fit.ks_normal = ks_statistic(
        samples, [nm, ns](double x) { return normal_cdf(x, nm, ns); });
    return fit;
}

void fidelity_statistics(const std::vector<std::vector<double>>& sweeps,
                         std::vector<double>& out_mean,
                         std::vector<double>& out_std) {
    if (sweeps.empty()) throw GridError("fidelity_statistics: no sweeps");
    const std::size_t n_points = sweeps.front().size();
    for (const auto& s : sweeps) {
        if (s.size() != n_points) {
            throw GridError("fidelity_statistics: mismatched gamma grids");
        }
    }
    out_mean.assign(n_points, 0.0);
    out_std.assign(n_points, 0.0);
    std::vector<double> column(sweeps.size());
    for (std::size_t p = 0; p < n_points; ++p) {
        for (std::size_t r = 0; r < sweeps.size(); ++r) column[r] = sweeps[r][p];
        out_mean[p] = mean(column);
        out_std[p] = population_std(column);
    }
}

EnsembleResult run_ensemble(std::uint64_t base_seed, int n_realizations,
                            const ProtocolConfig& protocol,
                            const SweepConfig& sweep, int threads) {
    if (n_realizations < 1) throw ModelError("n_realizations must be >= 1");

    EnsembleResult result;
    result.base_seed = base_seed;
    result.n_realizations = n_realizations;
    result.fidelity_gamma_grid = sweep.fidelity_gamma_grid;
    result.records.resize(n_realizations);

    const RegisterLayout spectral_layout = RegisterLayout::spectral(sweep.n_majorana);

    parallel_for(n_realizations, threads, [&](std::size_t i) {
        RealizationRecord& rec = result.records[i];
        rec.seed = derive_seed(base_seed, i);
        try {
            // gamma_c on the spectral-only register (identical spectrum,
            // smaller diagonalizations).
            const SykRealization spectral_real =
                make_realization(rec.seed, spectral_layout, sweep.j_scale);
            const OperatorMatrix h_top =
                assemble_h_eff(spectral_real, sweep.g_spectral, sweep.gamma_bracket_max);
            if (classify_phase(eig_general(h_top)) == PhaseLabel::broken_pt) {
                const EpEstimate est = find_critical_gamma(
                    spectral_real, sweep.g_spectral,
                    {0.0, sweep.gamma_bracket_max}, sweep.bisection_tol);
                rec.gamma_c = est.gamma_c;
                rec.pair_indices = est.pair_indices;
                rec.two_level_prediction = two_level_critical_gamma(two_level_reduce(
                    spectral_real, sweep.g_spectral, est.pair_indices));
            }

            if (!sweep.fidelity_gamma_grid.empty()) {
                const SykRealization protocol_real = make_realization(
                    rec.seed,
                    RegisterLayout::protocol(spectral_layout.n_majorana_per_side()),
                    sweep.j_scale);
                ProtocolEngine engine(protocol_real, protocol);
                const StateVector final = engine.final_state(protocol.g, protocol.t);
                rec.fidelities.reserve(sweep.fidelity_gamma_grid.size());
                for (double gamma : sweep.fidelity_gamma_grid) {
                    rec.fidelities.push_back(
                        engine.evaluate_with_final(final, gamma, protocol.t).fidelity);
                }
            }
        } catch (const Error& e) {
            rec.failure = e.what();
        }
    });

    std::vector<std::vector<double>> sweeps;
    for (const RealizationRecord& rec : result.records) {
        if (!rec.failure.empty()) {
            ++result.n_failed;
            continue;
        }
        if (rec.gamma_c) {
            result.gamma_c_samples.push_back(*rec.gamma_c);
            if (*rec.gamma_c > sweep.filter_threshold) {
                result.filtered_samples.push_back(*rec.gamma_c);
            }
        } else {
            ++result.n_no_transition;
        }
        if (!rec.fidelities.empty()) sweeps.push_back(rec.fidelities);
    }

    if (result.filtered_samples.size() >= 10) {
        result.lognormal_fit = fit_lognormal(result.filtered_samples);
    }
    if (result.gamma_c_samples.size() >= 10) {
        result.lognormal_fit_unfiltered = fit_lognormal(result.gamma_c_samples);
    }
    if (!sweeps.empty()) {
        fidelity_statistics(sweeps, result.fidelity_mean, result.fidelity_std);
    }
    return result;
}

SpacingReport spacing_report_from_levels(std::vector<double> levels) {
    SpacingReport report;
    std::sort(levels.begin(), levels.end());
    const int n = static_cast<int>(levels.size());
    if (n < 3) throw DomainError("spacing report needs >= 3 levels");
    report.diagnostic_only = n < 20;

    std::vector<double> gaps(n - 1);
    for (int i = 0; i + 1 < n; ++i) gaps[i] = levels[i + 1] - levels[i];

    // Unfold by the local mean spacing over a sliding window of 11 levels.
    const int half = 5;
    report.normalized_spacings.resize(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const int lo = std::max<int>(0, static_cast<int>(i) - half);
        const int hi = std::min<int>(static_cast<int>(gaps.size()) - 1,
                                     static_cast<int>(i) + half);
        double local = 0.0;
        for (int j = lo; j <= hi; ++j) local += gaps[j];
        local /= (hi - lo + 1);
        report.normalized_spacings[i] = local > 0.0 ? gaps[i] / local : 0.0;
    }

    // Gap-ratio statistic needs no unfolding.
    std::vector<double> ratios;
    ratios.reserve(gaps.size());
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        const double a = gaps[i], b = gaps[i + 1];
        const double hi = std::max(a, b);
        ratios.push_back(hi > 0.0 ? std::min(a, b) / hi : 1.0);
    }
    report.gap_ratio_mean = ratios.empty() ? 0.0 : mean(ratios);

    if (report.normalized_spacings.size() >= 2) {
        report.histogram = histogram_fd(report.normalized_spacings);
    }
    return report;
}

SpacingReport spacing_statistics(const SykRealization& realization, double g) {
    const OperatorMatrix h0 = assemble_h_eff(realization, g, 0.0);
    Eigen::VectorXd energies;
    Matrix vectors;
    eig_hermitian(h0.entries, energies, vectors);
    return spacing_report_from_levels(
        std::vector<double>(energies.data(), energies.data() + energies.size()));
}

}  // namespace ptwh
