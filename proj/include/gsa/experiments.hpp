#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsa/models.hpp"
#include "gsa/pawn.hpp"
#include "gsa/resampling.hpp"
#include "gsa/sampling.hpp"

namespace gsa {

/// Phase of the fire spread study as a function of the wind speed mean:
/// Stage1 for 2 < mu <= 3.5, Stage3 (the transition region, where both model
/// segments contribute) for 3.5 < mu < 6.5, Stage2 for 6.5 <= mu < 8.
enum class Stage { stage1, stage2, stage3 };
std::string to_string(Stage stage);

/// Throws std::domain_error outside the open interval (2, 8).
Stage stage_classify(double mean_wind_speed);

/// Estimator and confidence-interval settings for one study run.
struct StudySettings {
    std::size_t sobol_n = 4000;
    std::size_t mi_n = 10000;
    std::size_t delta_n = 5000;
    std::size_t pawn_n = 4000;
    std::size_t conditional_n = 2000000;
    int knn_k = 3;
    int conditional_entropy_k = 10;
    std::size_t delta_partitions = 0;  // 0 = sample-size-adaptive
    std::size_t pawn_intervals = 10;
    PawnStat pawn_stat = PawnStat::mean;
    PawnIntervalScheme pawn_scheme = PawnIntervalScheme::equal_width;
    int bootstrap_replications = 1000;
    int jackknife_groups = 1000;
    double ci_level = 0.95;
    bool with_ci = true;
    LhsPlacement placement = LhsPlacement::random;
};

/// All four indices for every input of the fire model at one wind-speed mean.
struct PointStudyResult {
    double mu_u = 0.0;
    Stage stage = Stage::stage3;
    std::vector<IndexEstimate> estimates;  // method-major, variables in declaration order
};

const IndexEstimate* find_estimate(const PointStudyResult& result, Method method,
                                   std::string_view variable);
std::vector<const IndexEstimate*> method_estimates(const PointStudyResult& result, Method method);

/// Runs the four estimators at their configured sample sizes with their
/// confidence-interval procedures (bootstrap for the variance-based, delta
/// and PAWN indices; grouped jackknife for mutual information), then ranks
/// each method's values. Deterministic given the seed.
PointStudyResult run_point_study(const StudySettings& settings, double mu_u, std::uint64_t seed);

inline constexpr double kDefaultSweepStart = 2.1;
inline constexpr double kDefaultSweepStop = 7.9;
inline constexpr double kDefaultSweepStep = 0.1;

struct SweepResult {
    std::vector<double> grid;
    std::vector<PointStudyResult> per_point;
    StudySettings settings;
};

/// Point studies across a grid of wind-speed means. Each grid point gets a
/// fresh seed derived from the master seed and the grid index.
SweepResult sweep_mu(const StudySettings& settings, double start, double stop, double step,
                     std::uint64_t seed);

/// Seed handed to the point study at one sweep grid index; a single-point
/// sweep with this seed reproduces run_point_study exactly.
std::uint64_t sweep_point_seed(std::uint64_t master_seed, std::size_t grid_index);

/// First grid crossing where (index of var_a - index of var_b) changes sign,
/// refined by linear interpolation between the bracketing grid points.
/// Empty when the difference never changes sign.
std::optional<double> detect_crossover(const SweepResult& sweep, Method method,
                                       std::string_view var_a, std::string_view var_b);

struct CurveData {
    std::vector<double> x;
    std::vector<double> y;
};

/// Output statistics and distribution curves when one input is pinned to
/// mean - 2 sd, mean - sd, mean, mean + sd, mean + 2 sd while the others stay
/// random. The same conditional sample (same sub-seed) is reused for all five
/// fix values, so fixes that are equivalent under the model produce
/// bit-identical outputs.
struct ConditionalProfile {
    std::string variable;
    std::array<double, 5> fix_values{};
    std::array<double, 5> variances{};
    std::array<double, 5> entropies{};
    std::array<double, 5> excess_kurtosis{};
    std::array<CurveData, 5> pdf_curves{};
    std::array<CurveData, 5> cdf_curves{};
    double baseline_variance = 0.0;
    double baseline_entropy = 0.0;
    double baseline_excess_kurtosis = 0.0;
    CurveData baseline_pdf;
    CurveData baseline_cdf;
};

ConditionalProfile conditional_profile_for_model(const StudySettings& settings,
                                                 const ModelDefinition& model,
                                                 std::size_t variable_index, std::uint64_t seed,
                                                 bool with_curves = true);

/// Fire-model profile for variable in {T, RH, U, FA}.
ConditionalProfile conditional_profile(const StudySettings& settings, std::string_view variable,
                                       double mu_u, std::uint64_t seed, bool with_curves = true);

/// Mean index values (over `repetitions` independent estimations) and the
/// ranking of those means, per method and sample size.
struct ConvergenceResult {
    std::vector<std::size_t> sample_sizes;
    std::vector<std::string> variables;
    std::map<Method, std::vector<std::vector<double>>> mean_values;  // [size][variable]
    std::map<Method, std::vector<std::vector<int>>> ranks;           // [size][variable]
};

ConvergenceResult convergence_study(const StudySettings& settings, double mu_u,
                                    std::span<const std::size_t> sample_sizes, int repetitions,
                                    std::uint64_t seed);

/// Seed used for one convergence repetition. With matching sample sizes, a
/// single-repetition study reproduces run_point_study's values.
std::uint64_t convergence_repetition_seed(std::uint64_t master_seed, int repetition);

/// Wall-clock cost of one end-to-end estimation (sampling, model evaluation
/// and index computation, no confidence intervals) per method and sample
/// size; the median of runs_per_cell runs on the monotonic clock. Absolute
/// numbers are environment-specific and are reported, not asserted.
struct TimingCell {
    Method method = Method::sobol_total;
    std::size_t sample_size = 0;
    double seconds = 0.0;
};

std::vector<TimingCell> timing_study(const StudySettings& settings,
                                     std::span<const std::size_t> sample_sizes,
                                     std::uint64_t seed, int runs_per_cell = 5);

}  // namespace gsa
