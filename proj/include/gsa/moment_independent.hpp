#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gsa {

/// Jitter stream used to break exact ties before neighbor searches; a fixed
/// default keeps the estimators pure functions of their inputs.
inline constexpr std::uint64_t kDefaultJitterSeed = 0x6a09e667f3bcc908ull;

/// Differential entropy in nats by the Kozachenko-Leonenko k-nearest-neighbor
/// estimate. Symmetric uniform jitter of 1e-10 times the sample range breaks
/// duplicates, which would otherwise corrupt the neighbor distances.

/// Requires at least k + 2 values; throws degenerate_data_error when all
/// values are identical (entropy diverges to -inf).
double differential_entropy(std::span<const double> values, int k = 3,
                            std::uint64_t jitter_seed = kDefaultJitterSeed);

/// Mutual information in nats by the Kraskov estimator (variant 1, max-norm
/// neighborhoods). Both marginals are standardized internally, so the result
/// is unchanged under affine rescaling of either input. Small negative
/// estimates are possible from estimator bias and are returned as-is; values
/// below -0.05 emit a diagnostics warning on stderr.
double knn_mutual_information(std::span<const double> x, std::span<const double> y, int k = 3,
                              std::uint64_t jitter_seed = kDefaultJitterSeed);

/// rho = sqrt(1 - exp(-2 eta)), mapping mutual information into [0, 1).
struct NormalizedMi {
    double value = 0.0;
    bool clamped_negative = false;  // eta < 0 was clamped to zero
};
NormalizedMi normalize_mi(double mi_nats);

enum class KdeBandwidthRule {
    normal_reference,  // 1.06 sd n^(-1/5); matches the reference delta pipeline
    robust,            // 0.9 min(sd, IQR/1.34) n^(-1/5)
};

/// Sample-size-adaptive class count used when DeltaOptions::partitions is 0:
/// min(ceil(n^(2 / (7 + tanh((1500 - n) / 500)))), 48), the rule of the
/// reference delta implementation (about 18 classes at n = 5000).
std::size_t delta_auto_partitions(std::size_t n);

struct DeltaOptions {
    std::size_t partitions = 0;    // equal-count conditioning classes; 0 = auto
    std::size_t grid_points = 1000;
    double pad_bandwidths = 3.0;   // grid extension beyond [min y, max y]
    KdeBandwidthRule bandwidth_rule = KdeBandwidthRule::normal_reference;
};

/// Density-difference sensitivity from given data: x is split into
/// equal-count classes, conditional and marginal output densities are
/// estimated by Gaussian KDE (Silverman bandwidth per class) on a shared
/// grid, and the index is half the probability-weighted L1 distance.
///
/// Requires at least 50 points per class; classes that would collapse below
/// two points raise std::invalid_argument. partitions = 0 selects the
/// adaptive class count.
double delta_given_data(std::span<const double> x, std::span<const double> y,
                        std::size_t partitions = 0);

/// Delta for several input columns against the same output sample; the
/// marginal density is built once and shared.
std::vector<double> delta_given_data_multi(const std::vector<std::vector<double>>& columns,
                                           std::span<const double> y,
                                           const DeltaOptions& options = {});

}  // namespace gsa
