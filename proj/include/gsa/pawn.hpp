#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gsa {

/// Exact sup-distance between the empirical CDFs of two samples, computed by
/// a sorted merge. Throws std::invalid_argument on empty input.
double ks_distance(std::span<const double> sample_a, std::span<const double> sample_b);

enum class PawnStat { mean, median, max };
std::string to_string(PawnStat stat);

/// How conditioning intervals are laid over x. Equal-width intervals span
/// [min x, max x] (the reference implementation's convention; tail intervals
/// hold few points but condition tightly); equal-count intervals balance the
/// per-interval sample sizes instead.
enum class PawnIntervalScheme { equal_width, equal_count };
std::string to_string(PawnIntervalScheme scheme);

/// CDF-based sensitivity of one variable.
struct PawnEstimate {
    std::string variable;
    double value = 0.0;                   // stat applied to per_interval_ks
    std::vector<double> per_interval_ks;  // one KS distance per conditioning interval
    PawnStat stat = PawnStat::mean;
};

/// Precomputed orderings of one (x, y) dataset, reused across resampling
/// replicates so each replicate costs two linear passes instead of a sort.
struct PawnWorkspace {
    std::size_t n_rows = 0;
    std::vector<double> x_by_rank;           // x ascending
    std::vector<std::uint32_t> rows_by_x;    // row ids in ascending-x order
    std::vector<std::uint32_t> rows_by_y;    // row ids in ascending-y order
};

PawnWorkspace make_pawn_workspace(std::span<const double> x, std::span<const double> y);

/// KS distance between each conditioning interval's conditional output sample
/// and the full output sample. x ties at an interval boundary stay with the
/// lower interval. counts_by_row gives each row's multiplicity (empty means
/// all ones). Intervals left empty report a KS of zero.
std::vector<double> pawn_interval_ks(const PawnWorkspace& workspace,
                                     std::span<const std::uint32_t> counts_by_row,
                                     std::size_t n_intervals,
                                     PawnIntervalScheme scheme = PawnIntervalScheme::equal_width);

/// `stat` over the KS values of the occupied intervals.
double pawn_statistic(std::span<const double> interval_ks, PawnStat stat);

/// PAWN index from a generic input-output sample: x is split into
/// conditioning intervals and the index is `stat` over the per-interval KS
/// distances. Requires at least 20 points per interval on average.
PawnEstimate pawn_given_data(std::span<const double> x, std::span<const double> y,
                             std::size_t n_intervals = 10, PawnStat stat = PawnStat::mean,
                             std::string variable = {},
                             PawnIntervalScheme scheme = PawnIntervalScheme::equal_width);

}  // namespace gsa
