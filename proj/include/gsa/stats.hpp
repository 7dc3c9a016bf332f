#pragma once

#include <span>

namespace gsa {

/// Fixed-order pairwise summation. Used for every estimator reduction so
/// totals are reproducible and rounding error stays O(log N).
double pairwise_sum(std::span<const double> values);

double mean(std::span<const double> values);

/// Unbiased sample variance, sum((y - mean)^2) / (N - 1).
/// Throws std::invalid_argument for fewer than two values.
double sample_variance(std::span<const double> values);

/// Sample excess kurtosis, m4 / m2^2 - 3 with central moments m2, m4.
double sample_excess_kurtosis(std::span<const double> values);

/// Digamma function for positive arguments: upward recurrence into the
/// asymptotic regime, then the standard Bernoulli-number series.
double digamma(double x);

/// Linear-interpolation quantile of an ascending-sorted sample
/// (the "type 7" convention). p must lie in [0, 1].
double quantile_sorted(std::span<const double> sorted_values, double p);

}  // namespace gsa
