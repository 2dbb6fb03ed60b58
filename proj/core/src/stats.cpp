#include "ptwh/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptwh/errors.hpp"

namespace ptwh {

double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw DomainError("mean of empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double population_std(const std::vector<double>& xs) {
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size()));
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw FitError("linear_fit needs >= 2 paired samples");
    }
    const double n = static_cast<double>(x.size());
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw FitError("linear_fit: degenerate abscissa");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    (void)n;
    return fit;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("KS statistic of empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
    const double idx = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(idx));
    const auto hi = static_cast<std::size_t>(std::ceil(idx));
    const double frac = idx - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

Histogram histogram_fd(std::vector<double> samples) {
    if (samples.size() < 2) throw DomainError("histogram needs >= 2 samples");
    std::sort(samples.begin(), samples.end());
    const double lo = samples.front(), hi = samples.back();
    const double iqr = quantile_sorted(samples, 0.75) - quantile_sorted(samples, 0.25);
    const double width =
        2.0 * iqr / std::cbrt(static_cast<double>(samples.size()));
    int bins = 1;
    if (width > 0.0 && hi > lo) {
        bins = std::max(1, static_cast<int>(std::ceil((hi - lo) / width)));
    }
    return histogram_fixed(samples, lo, hi, bins);
}

Histogram histogram_fixed(const std::vector<double>& samples, double lo, double hi,
                          int bins) {
    if (bins < 1 || !(hi >= lo)) throw DomainError("invalid histogram bins");
    Histogram h;
    h.edges.resize(bins + 1);
    h.counts.assign(bins, 0);
    const double width = bins > 0 ? (hi - lo) / bins : 0.0;
    for (int i = 0; i <= bins; ++i) h.edges[i] = lo + width * i;
    h.edges[bins] = hi;
    for (double x : samples) {
        if (x < lo || x > hi) continue;
        int b = width > 0.0 ? static_cast<int>((x - lo) / width) : 0;
        b = std::min(b, bins - 1);
        ++h.counts[b];
    }
    return h;
}

}  // namespace ptwh
