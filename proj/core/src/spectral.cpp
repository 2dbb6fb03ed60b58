#include "ptwh/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ptwh/errors.hpp"
#include "ptwh/linalg.hpp"
#include "ptwh/stats.hpp"

namespace ptwh {

namespace {

constexpr int kMaxRefineDepth = 8;

std::vector<int> greedy_assignment(const std::vector<Complex>& prev,
                                   const Vector& next) {
    const int n = static_cast<int>(prev.size());
    struct Entry {
        double d;
        int i, j;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries.push_back({std::abs(prev[i] - next(j)), i, j});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    std::vector<int> assign(n, -1);
    std::vector<bool> used_i(n, false), used_j(n, false);
    int placed = 0;
    for (const Entry& e : entries) {
        if (used_i[e.i] || used_j[e.j]) continue;
        assign[e.i] = e.j;
        used_i[e.i] = used_j[e.j] = true;
        if (++placed == n) break;
    }
    return assign;
}

/// Matches trajectory-ordered eigenvalues at gamma_a to the slice at
/// gamma_b, inserting midpoints when the greedy matching is ambiguous.
std::vector<Complex> track_step(const HamiltonianFn& hamiltonian,
                                const std::vector<Complex>& prev, double gamma_a,
                                const Vector& next_sorted, double gamma_b,
                                int depth) {
    const int n = static_cast<int>(prev.size());
    std::vector<int> assign = greedy_assignment(prev, next_sorted);

    std::vector<double> disp(n);
    for (int i = 0; i < n; ++i) disp[i] = std::abs(prev[i] - next_sorted(assign[i]));
    std::vector<double> sorted_disp = disp;
    std::sort(sorted_disp.begin(), sorted_disp.end());
    const double median = sorted_disp[n / 2];
    const double max_disp = sorted_disp[n - 1];

    if (max_disp > 3.0 * median && median > 0.0 && depth < kMaxRefineDepth &&
        gamma_b - gamma_a > 1e-12) {
        const double mid = 0.5 * (gamma_a + gamma_b);
        Spectrum s_mid = eig_general(hamiltonian(mid));
        std::vector<Complex> at_mid = track_step(hamiltonian, prev, gamma_a,
                                                 s_mid.eigenvalues, mid, depth + 1);
        return track_step(hamiltonian, at_mid, mid, next_sorted, gamma_b, depth + 1);
    }

    std::vector<Complex> out(n);
    for (int i = 0; i < n; ++i) out[i] = next_sorted(assign[i]);
    return out;
}

/// Indices of the two H_0 eigenstates with the largest overlap against
/// the gain-mode eigenvector.
std::pair<int, int> identify_pair(const Matrix& h0_vectors, const Vector& gain_mode) {
    Vector overlaps = h0_vectors.adjoint() * gain_mode;
    int best = 0, second = 1;
    double best_w = -1.0, second_w = -1.0;
    for (Eigen::Index i = 0; i < overlaps.size(); ++i) {
        const double w = std::norm(overlaps(i));
        if (w > best_w) {
            second = best;
            second_w = best_w;
            best = static_cast<int>(i);
            best_w = w;
        } else if (w > second_w) {
            second = static_cast<int>(i);
            second_w = w;
        }
    }
    return {std::min(best, second), std::max(best, second)};
}

}  // namespace

PhaseLabel classify_phase(const Spectrum& spectrum, double epsilon_imag) {
    const double max_imag = spectrum.eigenvalues.imag().cwiseAbs().maxCoeff();
    return max_imag < epsilon_imag * spectrum.matrix_norm ? PhaseLabel::exact_pt
                                                          : PhaseLabel::broken_pt;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> grid(n);
    if (n == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int i = 0; i < n; ++i) grid[i] = lo + (hi - lo) * i / (n - 1);
    return grid;
}

SpectralSweep sweep_spectrum(const HamiltonianFn& hamiltonian,
                             const std::vector<double>& gamma_grid,
                             double epsilon_imag) {
    if (gamma_grid.empty()) throw ModelError("gamma grid is empty");
    if (!std::is_sorted(gamma_grid.begin(), gamma_grid.end())) {
        throw ModelError("gamma grid must be ascending");
    }

    SpectralSweep sweep;
    sweep.gamma_grid = gamma_grid;
    sweep.epsilon_imag = epsilon_imag;

    Spectrum first;
    try {
        first = eig_general(hamiltonian(gamma_grid[0]));
    } catch (const SpectralError& e) {
        throw SpectralError("sweep failed at gamma=" +
                            std::to_string(gamma_grid[0]) + ": " + e.what());
    }
    const int n_levels = static_cast<int>(first.eigenvalues.size());
    sweep.trajectories.assign(n_levels, {});
    for (int i = 0; i < n_levels; ++i) {
        sweep.trajectories[i].push_back(first.eigenvalues(i));
    }
    sweep.phase_labels.push_back(classify_phase(first, epsilon_imag));

    std::vector<Complex> prev(n_levels);
    for (int i = 0; i < n_levels; ++i) prev[i] = first.eigenvalues(i);

    for (std::size_t gi = 1; gi < gamma_grid.size(); ++gi) {
        Spectrum s;
        try {
            s = eig_general(hamiltonian(gamma_grid[gi]));
        } catch (const SpectralError& e) {
            throw SpectralError("sweep failed at gamma=" +
                                std::to_string(gamma_grid[gi]) + ": " + e.what());
        }
        prev = track_step(hamiltonian, prev, gamma_grid[gi - 1], s.eigenvalues,
                          gamma_grid[gi], 0);
        for (int i = 0; i < n_levels; ++i) sweep.trajectories[i].push_back(prev[i]);
        sweep.phase_labels.push_back(classify_phase(s, epsilon_imag));
        if (!sweep.detected_gamma_c &&
            sweep.phase_labels[gi - 1] == PhaseLabel::exact_pt &&
            sweep.phase_labels[gi] == PhaseLabel::broken_pt) {
            sweep.detected_gamma_c = 0.5 * (gamma_grid[gi - 1] + gamma_grid[gi]);
        }
    }
    return sweep;
}

SpectralSweep sweep_spectrum(const SykRealization& realization, double g,
                             const std::vector<double>& gamma_grid) {
    return sweep_spectrum(
        [&](double gamma) { return assemble_h_eff(realization, g, gamma); },
        gamma_grid);
}

EpEstimate find_critical_gamma(const HamiltonianFn& hamiltonian,
                               std::pair<double, double> bracket, double tol,
                               double epsilon_imag) {
    double lo = bracket.first, hi = bracket.second;
    if (!(lo < hi)) {
        throw BracketError("degenerate bracket [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
    Spectrum s_lo = eig_general(hamiltonian(lo));
    Spectrum s_hi = eig_general(hamiltonian(hi));
    if (classify_phase(s_lo, epsilon_imag) != PhaseLabel::exact_pt) {
        throw BracketError("phase at gamma_lo=" + std::to_string(lo) +
                           " is not exact_PT");
    }
    if (classify_phase(s_hi, epsilon_imag) != PhaseLabel::broken_pt) {
        throw BracketError("phase at gamma_hi=" + std::to_string(hi) +
                           " is not broken_PT");
    }

    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        Spectrum s_mid = eig_general(hamiltonian(mid));
        if (classify_phase(s_mid, epsilon_imag) == PhaseLabel::broken_pt) {
            hi = mid;
            s_hi = std::move(s_mid);
        } else {
            lo = mid;
        }
    }

    EpEstimate est;
    est.gamma_c = 0.5 * (lo + hi);
    est.bracket_width = hi - lo;
    est.method = EpMethod::bisection_full_ed;

    // Just above the transition: gain modes are the positive-imaginary
    // eigenvalues. More than one conjugate pair here means simultaneous
    // coalescences within tol.
    const double imag_floor = epsilon_imag * s_hi.matrix_norm;
    int n_gain = 0;
    int gain_index = -1;
    double max_imag = 0.0;
    for (Eigen::Index i = 0; i < s_hi.eigenvalues.size(); ++i) {
        const double im = s_hi.eigenvalues(i).imag();
        if (im > imag_floor) {
            ++n_gain;
            if (im > max_imag) {
                max_imag = im;
                gain_index = static_cast<int>(i);
            }
        }
    }
    est.multiple_coalescence = n_gain > 1;

    if (gain_index >= 0) {
        Spectrum s0 = eig_general(hamiltonian(0.0));
        est.pair_indices =
            identify_pair(s0.right_eigenvectors, s_hi.right_eigenvectors.col(gain_index));
    }
    return est;
}

EpEstimate find_critical_gamma(const SykRealization& realization, double g,
                               std::pair<double, double> bracket, double tol) {
    return find_critical_gamma(
        [&](double gamma) { return assemble_h_eff(realization, g, gamma); },
        bracket, tol);
}

TwoLevelModel two_level_reduce(const SykRealization& realization, double g,
                               std::pair<int, int> pair) {
    const auto [n, m] = pair;
    OperatorMatrix h0 = assemble_h_eff(realization, g, 0.0);
    Eigen::VectorXd energies;
    Matrix vectors;
    eig_hermitian(h0.entries, energies, vectors);
    if (n == m || n < 0 || m < 0 || n >= energies.size() || m >= energies.size()) {
        throw SpectralError("invalid eigenindex pair (" + std::to_string(n) + ", " +
                            std::to_string(m) + ")");
    }
    const Matrix& vpt = realization.pt_generator.entries;
    TwoLevelModel model;
    model.e_n = energies(n);
    model.e_m = energies(m);
    model.pair_indices = pair;
    model.v = vectors.col(n).dot(vpt * vectors.col(m));
    model.diag_n = vectors.col(n).dot(vpt * vectors.col(n)).real();
    model.diag_m = vectors.col(m).dot(vpt * vectors.col(m)).real();
    return model;
}

std::pair<Complex, Complex> two_level_eigenvalues(const TwoLevelModel& model,
                                                  double gamma) {
    const double mean = 0.5 * (model.e_n + model.e_m);
    const double half_gap = 0.5 * (model.e_n - model.e_m);
    const double coupling = gamma * std::abs(model.v);
    const double disc = half_gap * half_gap - coupling * coupling;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        return {Complex{mean + root, 0.0}, Complex{mean - root, 0.0}};
    }
    const double root = std::sqrt(-disc);
    return {Complex{mean, root}, Complex{mean, -root}};
}

double two_level_critical_gamma(const TwoLevelModel& model) {
    const double av = std::abs(model.v);
    if (av == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(model.e_n - model.e_m) / (2.0 * av);
}

std::pair<int, int> weakest_link_pair(const SykRealization& realization, double g) {
    OperatorMatrix h0 = assemble_h_eff(realization, g, 0.0);
    Eigen::VectorXd energies;
    Matrix vectors;
    eig_hermitian(h0.entries, energies, vectors);
    const Matrix w = vectors.adjoint() * realization.pt_generator.entries * vectors;
    const double v_floor =
        1e-10 * static_cast<double>(realization.layout.n_majorana_per_side());

    double best_ratio = std::numeric_limits<double>::infinity();
    std::pair<int, int> best{-1, -1};
    for (Eigen::Index n = 0; n < energies.size(); ++n) {
        for (Eigen::Index m = n + 1; m < energies.size(); ++m) {
            const double av = std::abs(w(n, m));
            if (av < v_floor) continue;  // uncoupled pair, no EP at any gamma
            const double ratio = std::abs(energies(n) - energies(m)) / (2.0 * av);
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best = {static_cast<int>(n), static_cast<int>(m)};
            }
        }
    }
    if (best.first < 0) {
        throw SpectralError("no V_PT-coupled pair found");
    }
    return best;
}

double fit_cusp_exponent(const SpectralSweep& sweep, std::pair<int, int> pair,
                         double gamma_c) {
    const auto [n, m] = pair;
    const int n_levels = static_cast<int>(sweep.trajectories.size());
    if (n < 0 || m < 0 || n >= n_levels || m >= n_levels || n == m) {
        throw FitError("invalid trajectory pair");
    }
    const double lo = gamma_c - 0.2 * gamma_c;
    std::vector<double> log_dist, log_gap;
    for (std::size_t gi = 0; gi < sweep.gamma_grid.size(); ++gi) {
        const double gamma = sweep.gamma_grid[gi];
        if (gamma <= lo || gamma >= gamma_c) continue;
        const double gap =
            std::abs(sweep.trajectories[n][gi] - sweep.trajectories[m][gi]);
        if (gap <= 1e-12) continue;  // below eigensolver noise
        log_dist.push_back(std::log(gamma_c - gamma));
        log_gap.push_back(std::log(gap));
    }
    if (log_dist.size() < 8) {
        throw FitError("only " + std::to_string(log_dist.size()) +
                       " resolved points in the cusp window (need >= 8)");
    }
    return linear_fit(log_dist, log_gap).slope;
}

double fit_gap_quadratic_coefficient(const std::vector<double>& gammas,
                                     const std::vector<double>& gaps,
                                     double gap0) {
    if (gammas.size() != gaps.size() || gammas.size() < 2) {
        throw FitError("need at least 2 gap samples");
    }
    // Least squares for dE - dE0 = c * gamma^2.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        const double g2 = gammas[i] * gammas[i];
        num += g2 * (gaps[i] - gap0);
        den += g2 * g2;
    }
    if (den == 0.0) throw FitError("degenerate gamma samples");
    return num / den;
}

double gap_attraction_coefficient(const TwoLevelModel& model, double gamma_small) {
    const double gap0 = std::abs(model.e_n - model.e_m);
    if (!(gamma_small > 0.0)) throw RegimeError("gamma_small must be positive");
    if (gamma_small * std::abs(model.v) >= 0.1 * gap0 / 2.0) {
        throw RegimeError("gamma_small * |v| = " +
                          std::to_string(gamma_small * std::abs(model.v)) +
                          " outside the perturbative regime (< 0.05 * dE_0)");
    }
    const int n_samples = 8;
    std::vector<double> gammas(n_samples), gaps(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        gammas[i] = gamma_small * (i + 1) / n_samples;
        auto [plus, minus] = two_level_eigenvalues(model, gammas[i]);
        gaps[i] = std::abs(plus - minus);
    }
    return fit_gap_quadratic_coefficient(gammas, gaps, gap0);
}

}  // namespace ptwh
