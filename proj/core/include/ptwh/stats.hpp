#pragma once

#include <functional>
#include <vector>

namespace ptwh {

double mean(const std::vector<double>& xs);

/// Population standard deviation (divides by n).
double population_std(const std::vector<double>& xs);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// One-sample Kolmogorov-Smirnov statistic against an arbitrary CDF.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

double normal_cdf(double x, double mu, double sigma);

struct Histogram {
    std::vector<double> edges;  // bins + 1 entries
    std::vector<int> counts;
};

/// Freedman-Diaconis bin width.
Histogram histogram_fd(std::vector<double> samples);

Histogram histogram_fixed(const std::vector<double>& samples, double lo, double hi,
                          int bins);

}  // namespace ptwh
