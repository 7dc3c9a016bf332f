#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsa/distribution.hpp"
#include "gsa/experiments.hpp"

namespace gsa {

enum class Profile { paper, fast };
std::string to_string(Profile profile);

/// Full run configuration: the bundled variable set, per-method sample
/// sizes, estimator hyperparameters, resampling settings and experiment
/// grids. Defaults reproduce the reference study; the fast profile divides
/// every sample size by ten for CI pipelines.
struct RunConfig {
    std::string model = "dry_eucalypt";
    double mu_u = 4.7;

    // Fire model inputs; U's mean is mu_u and is set through it.
    std::vector<RandomVariableSpec> variables = fire_spread_specs(4.7);

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

    std::uint64_t seed = 1;
    std::string out_dir = "gsa_out";
    Profile profile = Profile::paper;
    bool lhs_midpoint = false;

    double sweep_start = kDefaultSweepStart;
    double sweep_stop = kDefaultSweepStop;
    double sweep_step = kDefaultSweepStep;
    bool sweep_ci = false;

    std::vector<std::size_t> convergence_sizes = {500, 1000, 2000, 4000, 8000};
    int convergence_repetitions = 100;
    std::vector<std::size_t> timing_sizes = {1000, 4000, 16000};
    int timing_runs = 5;

    bool operator==(const RunConfig&) const = default;

    /// Estimator settings derived from this configuration.
    StudySettings study_settings() const;

    /// Throws config_error when a field violates its invariant.
    void validate() const;
};

/// Parses a key=value configuration file ('#' starts a comment, one key per
/// line). Omitted keys keep their defaults; with `profile = fast` the
/// defaulted sample sizes are divided by ten. Unknown keys, duplicate keys
/// and invariant violations raise config_error with the line number.
RunConfig parse_config(const std::string& path);

/// Same parser over an in-memory string (used by tests and round-trips).
RunConfig parse_config_text(const std::string& text);

/// Serializes every field explicitly; parse_config_text(serialize_config(c))
/// reproduces c exactly.
std::string serialize_config(const RunConfig& config);

}  // namespace gsa
