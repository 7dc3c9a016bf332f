#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gsa {

struct CiInterval {
    double low = 0.0;
    double high = 0.0;
};

enum class Method { sobol_total, sobol_main, mi, delta, pawn };
std::string to_string(Method method);

/// One (method, variable) sensitivity value with confidence interval and rank.
struct IndexEstimate {
    Method method = Method::sobol_total;
    std::string variable;
    double value = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    int rank = 0;
};

/// Statistic evaluated on a resample, identified by resampled row indices so
/// designs with linked matrices can resample rows jointly. Returns one value
/// per tracked statistic.
using MultiRowStatistic = std::function<std::vector<double>(std::span<const std::size_t>)>;

/// Percentile bootstrap intervals over `replications` resamples-with-
/// replacement of the row indices [0, n_rows). All statistics share the same
/// resamples. Deterministic given the seed; replicate failures are rethrown
/// with the replicate index attached. Requires replications >= 100.
std::vector<CiInterval> bootstrap_ci_rows(std::size_t n_rows, const MultiRowStatistic& statistic,
                                          int replications = 1000, double level = 0.95,
                                          std::uint64_t seed = 0);

/// Convenience wrapper resampling a single data vector.
CiInterval bootstrap_ci(std::span<const double> data,
                        const std::function<double(std::span<const double>)>& statistic,
                        int replications = 1000, double level = 0.95, std::uint64_t seed = 0);

/// Delete-one-group jackknife interval for a paired-sample estimator.
///
/// Rows are shuffled once, split into `groups` blocks, and the estimator is
/// re-run with each block removed; the interval is the normal approximation
/// with the grouped jackknife variance. Used for mutual information, where
/// bootstrap duplicates would inflate the k-NN estimate. Requires at least
/// two points per group.
CiInterval grouped_jackknife_ci(
    std::span<const double> x, std::span<const double> y,
    const std::function<double(std::span<const double>, std::span<const double>)>& estimator,
    int groups = 1000, double level = 0.95, std::uint64_t shuffle_seed = 0);

/// Ranks with 1 for the largest value; ties resolve to the earlier position
/// (variable declaration order). Returned ranks align with the input order.
std::vector<int> rank_indices(std::span<const double> values);

}  // namespace gsa
