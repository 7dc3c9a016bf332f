#include "gsa/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gsa/kde.hpp"
#include "gsa/moment_independent.hpp"
#include "gsa/rng.hpp"
#include "gsa/sobol.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

constexpr std::uint64_t kTagSobol = 1;
constexpr std::uint64_t kTagMi = 2;
constexpr std::uint64_t kTagDelta = 3;
constexpr std::uint64_t kTagPawn = 4;
constexpr std::uint64_t kTagConditional = 5;
constexpr std::uint64_t kTagSweep = 6;
constexpr std::uint64_t kTagConvergence = 7;
constexpr std::uint64_t kTagTiming = 8;
constexpr std::uint64_t kTagCi = 9;

/// Partition count clamped so every class keeps >= ~100 points; small runs
/// (the fast profile, convergence grids) would otherwise violate the
/// 50-points-per-class floor of the delta estimator.
std::size_t effective_delta_partitions(const StudySettings& settings, std::size_t n) {
    if (settings.delta_partitions == 0) return 0;  // adaptive rule in the estimator
    return std::clamp<std::size_t>(n / 100, 2, settings.delta_partitions);
}

/// Group count clamped so each jackknife block keeps >= 2 points.
int effective_jackknife_groups(const StudySettings& settings, std::size_t n) {
    return static_cast<int>(
        std::clamp<std::size_t>(n / 2, 2, static_cast<std::size_t>(settings.jackknife_groups)));
}

SampleSet sampled_run(const ModelDefinition& model, std::size_t n, std::uint64_t seed,
                      LhsPlacement placement) {
    SampleSet set = lhs_sample(model.input_specs, n, seed, placement);
    evaluate_model(model, set);
    return set;
}

std::vector<std::vector<double>> input_columns(const SampleSet& set) {
    std::vector<std::vector<double>> cols;
    cols.reserve(set.cols());
    for (std::size_t i = 0; i < set.cols(); ++i) cols.push_back(column(set, i));
    return cols;
}

/// Point estimates for one method at one sample size, sharing the seed path
/// with run_point_study so a single-repetition convergence run reproduces the
/// point study exactly.
std::vector<double> estimate_method_values(const StudySettings& settings,
                                           const ModelDefinition& model, Method method,
                                           std::size_t n, std::uint64_t master_seed) {
    switch (method) {
        case Method::sobol_total:
        case Method::sobol_main: {
            const auto estimates =
                sobol_from_evaluations(evaluate_sobol_design(
                    model, n, derive_seed(master_seed, {kTagSobol}), settings.placement));
            std::vector<double> values;
            for (const auto& est : estimates) {
                values.push_back(method == Method::sobol_total ? est.total_effect
                                                               : est.main_effect);
            }
            return values;
        }
        case Method::mi: {
            const SampleSet set =
                sampled_run(model, n, derive_seed(master_seed, {kTagMi}), settings.placement);
            std::vector<double> values;
            for (std::size_t i = 0; i < set.cols(); ++i) {
                values.push_back(
                    knn_mutual_information(column(set, i), set.outputs, settings.knn_k));
            }
            return values;
        }
        case Method::delta: {
            const SampleSet set =
                sampled_run(model, n, derive_seed(master_seed, {kTagDelta}), settings.placement);
            DeltaOptions options;
            options.partitions = effective_delta_partitions(settings, n);
            return delta_given_data_multi(input_columns(set), set.outputs, options);
        }
        case Method::pawn: {
            const SampleSet set =
                sampled_run(model, n, derive_seed(master_seed, {kTagPawn}), settings.placement);
            std::vector<double> values;
            for (std::size_t i = 0; i < set.cols(); ++i) {
                values.push_back(pawn_given_data(column(set, i), set.outputs,
                                                 settings.pawn_intervals, settings.pawn_stat, {},
                                                 settings.pawn_scheme)
                                     .value);
            }
            return values;
        }
    }
    throw std::logic_error("estimate_method_values: unknown method");
}

void append_method_estimates(std::vector<IndexEstimate>& out, Method method,
                             const std::vector<std::string>& variables,
                             const std::vector<double>& values,
                             const std::vector<CiInterval>& intervals) {
    const std::vector<int> ranks = rank_indices(values);
    for (std::size_t i = 0; i < variables.size(); ++i) {
        IndexEstimate est;
        est.method = method;
        est.variable = variables[i];
        est.value = values[i];
        if (intervals.empty()) {
            est.ci_low = est.ci_high = values[i];
        } else {
            // Resampling bias (duplicate rows sharpen density estimates) can
            // push bootstrap quantiles past the point estimate at small N;
            // widen so the interval always brackets the reported value.
            est.ci_low = std::min(intervals[i].low, values[i]);
            est.ci_high = std::max(intervals[i].high, values[i]);
        }
        est.rank = ranks[i];
        out.push_back(std::move(est));
    }
}

}  // namespace

std::string to_string(Stage stage) {
    switch (stage) {
        case Stage::stage1: return "Stage1";
        case Stage::stage2: return "Stage2";
        case Stage::stage3: return "Stage3";
    }
    return "Stage3";
}

Stage stage_classify(double mean_wind_speed) {
    if (!(mean_wind_speed > 2.0 && mean_wind_speed < 8.0)) {
        throw std::domain_error("stage_classify: wind speed mean outside (2, 8)");
    }
    if (mean_wind_speed <= 3.5) return Stage::stage1;
    if (mean_wind_speed < 6.5) return Stage::stage3;
    return Stage::stage2;
}

const IndexEstimate* find_estimate(const PointStudyResult& result, Method method,
                                   std::string_view variable) {
    for (const auto& est : result.estimates) {
        if (est.method == method && est.variable == variable) return &est;
    }
    return nullptr;
}

std::vector<const IndexEstimate*> method_estimates(const PointStudyResult& result, Method method) {
    std::vector<const IndexEstimate*> out;
    for (const auto& est : result.estimates) {
        if (est.method == method) out.push_back(&est);
    }
    return out;
}

PointStudyResult run_point_study(const StudySettings& settings, double mu_u, std::uint64_t seed) {
    const ModelDefinition model = dry_eucalypt_model(mu_u);
    std::vector<std::string> variables;
    for (const auto& spec : model.input_specs) variables.push_back(spec.name);
    const std::size_t n_vars = variables.size();

    PointStudyResult result;
    result.mu_u = mu_u;
    result.stage = stage_classify(mu_u);

    // Variance-based indices: main and total effect come from one design.
    {
        const SobolEvaluations evals = evaluate_sobol_design(
            model, settings.sobol_n, derive_seed(seed, {kTagSobol}), settings.placement);
        const auto estimates = sobol_from_evaluations(evals);
        std::vector<double> main_values, total_values;
        for (const auto& est : estimates) {
            main_values.push_back(est.main_effect);
            total_values.push_back(est.total_effect);
        }
        std::vector<CiInterval> main_ci, total_ci;
        if (settings.with_ci) {
            const auto intervals = bootstrap_ci_rows(
                settings.sobol_n,
                [&](std::span<const std::size_t> rows) {
                    const auto resampled = sobol_from_evaluations(evals, rows);
                    std::vector<double> stats;
                    stats.reserve(2 * resampled.size());
                    for (const auto& est : resampled) stats.push_back(est.main_effect);
                    for (const auto& est : resampled) stats.push_back(est.total_effect);
                    return stats;
                },
                settings.bootstrap_replications, settings.ci_level,
                derive_seed(seed, {kTagSobol, kTagCi}));
            main_ci.assign(intervals.begin(), intervals.begin() + n_vars);
            total_ci.assign(intervals.begin() + n_vars, intervals.end());
        }
        append_method_estimates(result.estimates, Method::sobol_total, variables, total_values,
                                total_ci);
        append_method_estimates(result.estimates, Method::sobol_main, variables, main_values,
                                main_ci);
    }

    // Mutual information with grouped jackknife intervals.
    {
        const SampleSet set = sampled_run(model, settings.mi_n,
                                          derive_seed(seed, {kTagMi}), settings.placement);
        std::vector<double> values(n_vars);
        std::vector<CiInterval> intervals;
        for (std::size_t i = 0; i < n_vars; ++i) {
            values[i] = knn_mutual_information(column(set, i), set.outputs, settings.knn_k);
        }
        if (settings.with_ci) {
            intervals.resize(n_vars);
            for (std::size_t i = 0; i < n_vars; ++i) {
                intervals[i] = grouped_jackknife_ci(
                    column(set, i), set.outputs,
                    [&](std::span<const double> xs, std::span<const double> ys) {
                        return knn_mutual_information(xs, ys, settings.knn_k);
                    },
                    effective_jackknife_groups(settings, settings.mi_n), settings.ci_level,
                    derive_seed(seed, {kTagMi, kTagCi, i}));
            }
        }
        append_method_estimates(result.estimates, Method::mi, variables, values, intervals);
    }

    // Delta index with bootstrap intervals (rows resampled jointly, so all
    // variables share each replicate's marginal density).
    {
        const SampleSet set = sampled_run(model, settings.delta_n,
                                          derive_seed(seed, {kTagDelta}), settings.placement);
        const std::vector<std::vector<double>> cols = input_columns(set);
        DeltaOptions options;
        options.partitions = effective_delta_partitions(settings, settings.delta_n);
        const std::vector<double> values = delta_given_data_multi(cols, set.outputs, options);
        std::vector<CiInterval> intervals;
        if (settings.with_ci) {
            intervals = bootstrap_ci_rows(
                settings.delta_n,
                [&](std::span<const std::size_t> rows) {
                    std::vector<std::vector<double>> rcols(cols.size());
                    std::vector<double> ry(rows.size());
                    for (std::size_t c = 0; c < cols.size(); ++c) {
                        rcols[c].resize(rows.size());
                        for (std::size_t r = 0; r < rows.size(); ++r) {
                            rcols[c][r] = cols[c][rows[r]];
                        }
                    }
                    for (std::size_t r = 0; r < rows.size(); ++r) ry[r] = set.outputs[rows[r]];
                    return delta_given_data_multi(rcols, ry, options);
                },
                settings.bootstrap_replications, settings.ci_level,
                derive_seed(seed, {kTagDelta, kTagCi}));
        }
        append_method_estimates(result.estimates, Method::delta, variables, values, intervals);
    }

    // PAWN with bootstrap intervals; replicates reuse the precomputed
    // orderings and cost two linear passes each.
    {
        const SampleSet set = sampled_run(model, settings.pawn_n,
                                          derive_seed(seed, {kTagPawn}), settings.placement);
        std::vector<PawnWorkspace> workspaces;
        workspaces.reserve(n_vars);
        for (std::size_t i = 0; i < n_vars; ++i) {
            workspaces.push_back(make_pawn_workspace(column(set, i), set.outputs));
        }
        std::vector<double> values(n_vars);
        for (std::size_t i = 0; i < n_vars; ++i) {
            values[i] = pawn_statistic(
                pawn_interval_ks(workspaces[i], {}, settings.pawn_intervals, settings.pawn_scheme),
                settings.pawn_stat);
        }
        std::vector<CiInterval> intervals;
        if (settings.with_ci) {
            intervals = bootstrap_ci_rows(
                settings.pawn_n,
                [&](std::span<const std::size_t> rows) {
                    std::vector<std::uint32_t> counts(set.rows(), 0);
                    for (const std::size_t r : rows) ++counts[r];
                    std::vector<double> stats(n_vars);
                    for (std::size_t i = 0; i < n_vars; ++i) {
                        stats[i] = pawn_statistic(
                            pawn_interval_ks(workspaces[i], counts, settings.pawn_intervals,
                                             settings.pawn_scheme),
                            settings.pawn_stat);
                    }
                    return stats;
                },
                settings.bootstrap_replications, settings.ci_level,
                derive_seed(seed, {kTagPawn, kTagCi}));
        }
        append_method_estimates(result.estimates, Method::pawn, variables, values, intervals);
    }

    return result;
}

SweepResult sweep_mu(const StudySettings& settings, double start, double stop, double step,
                     std::uint64_t seed) {
    if (!(step > 0.0)) throw std::invalid_argument("sweep_mu: step must be positive");
    if (stop < start) throw std::invalid_argument("sweep_mu: empty range");

    SweepResult sweep;
    sweep.settings = settings;
    const auto n_points = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    sweep.grid.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        sweep.grid.push_back(start + step * static_cast<double>(i));
    }
    sweep.per_point.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        sweep.per_point.push_back(
            run_point_study(settings, sweep.grid[i], sweep_point_seed(seed, i)));
    }
    return sweep;
}

std::uint64_t sweep_point_seed(std::uint64_t master_seed, std::size_t grid_index) {
    return derive_seed(master_seed, {kTagSweep, grid_index});
}

std::optional<double> detect_crossover(const SweepResult& sweep, Method method,
                                       std::string_view var_a, std::string_view var_b) {
    std::vector<double> diff;
    diff.reserve(sweep.per_point.size());
    for (const auto& point : sweep.per_point) {
        const IndexEstimate* a = find_estimate(point, method, var_a);
        const IndexEstimate* b = find_estimate(point, method, var_b);
        if (a == nullptr || b == nullptr) {
            throw std::invalid_argument("detect_crossover: unknown variable");
        }
        diff.push_back(a->value - b->value);
    }
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
        // Exact zeros are ties, not sign changes; skip them so a constant
        // (or identical-series) difference reports no crossing.
        if (diff[i] == 0.0 || diff[i + 1] == 0.0) continue;
        if ((diff[i] < 0.0) != (diff[i + 1] < 0.0)) {
            const double frac = diff[i] / (diff[i] - diff[i + 1]);
            return sweep.grid[i] + frac * (sweep.grid[i + 1] - sweep.grid[i]);
        }
    }
    return std::nullopt;
}

namespace {

CurveData empirical_cdf_curve(std::span<const double> sorted_values, std::size_t max_points) {
    CurveData curve;
    const std::size_t n = sorted_values.size();
    const std::size_t points = std::min(max_points, n);
    curve.x.reserve(points);
    curve.y.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const std::size_t idx =
            points == 1 ? n - 1 : i * (n - 1) / (points - 1);
        curve.x.push_back(sorted_values[idx]);
        curve.y.push_back(static_cast<double>(idx + 1) / static_cast<double>(n));
    }
    return curve;
}

CurveData pdf_curve(std::span<const double> sorted_values, std::size_t grid_points) {
    const double h = silverman_bandwidth_sorted(sorted_values);
    UniformGrid grid;
    grid.count = grid_points;
    grid.start = sorted_values.front() - 3.0 * h;
    const double stop = sorted_values.back() + 3.0 * h;
    grid.step = (stop - grid.start) / static_cast<double>(grid.count - 1);
    const DensityEstimate density = gaussian_kde(sorted_values, grid, h);
    return {density.grid, density.density};
}

struct OutputSummary {
    double variance = 0.0;
    double entropy = 0.0;
    double excess_kurtosis = 0.0;
    CurveData pdf;
    CurveData cdf;
};

OutputSummary summarize_outputs(std::vector<double> outputs, int entropy_k, bool with_curves) {
    OutputSummary summary;
    summary.variance = sample_variance(outputs);
    summary.entropy = differential_entropy(outputs, entropy_k);
    summary.excess_kurtosis = sample_excess_kurtosis(outputs);
    if (with_curves) {
        std::sort(outputs.begin(), outputs.end());
        summary.pdf = pdf_curve(outputs, 512);
        summary.cdf = empirical_cdf_curve(outputs, 512);
    }
    return summary;
}

}  // namespace

ConditionalProfile conditional_profile_for_model(const StudySettings& settings,
                                                 const ModelDefinition& model,
                                                 std::size_t variable_index, std::uint64_t seed,
                                                 bool with_curves) {
    if (variable_index >= model.input_specs.size()) {
        throw std::invalid_argument("conditional_profile: variable index out of range");
    }
    const RandomVariableSpec& spec = model.input_specs[variable_index];

    ConditionalProfile profile;
    profile.variable = spec.name;
    for (int f = 0; f < 5; ++f) {
        const double value = spec.mean + static_cast<double>(f - 2) * spec.std_dev;
        if (value < spec.lower || value > spec.upper) {
            throw std::invalid_argument("conditional_profile: fix value for '" + spec.name +
                                        "' falls outside the acceptable range");
        }
        profile.fix_values[static_cast<std::size_t>(f)] = value;
    }

    {
        SampleSet baseline = lhs_sample(model.input_specs, settings.conditional_n,
                                        derive_seed(seed, {kTagConditional, 0}),
                                        settings.placement);
        evaluate_model(model, baseline);
        const OutputSummary summary =
            summarize_outputs(std::move(baseline.outputs), settings.conditional_entropy_k, with_curves);
        profile.baseline_variance = summary.variance;
        profile.baseline_entropy = summary.entropy;
        profile.baseline_excess_kurtosis = summary.excess_kurtosis;
        profile.baseline_pdf = summary.pdf;
        profile.baseline_cdf = summary.cdf;
    }

    // One shared conditional sample of the remaining inputs: fixes that the
    // model cannot distinguish then yield bit-identical outputs.
    std::vector<RandomVariableSpec> reduced = model.input_specs;
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(variable_index));
    const SampleSet reduced_sample =
        lhs_sample(reduced, settings.conditional_n,
                   derive_seed(seed, {kTagConditional, 1 + variable_index}), settings.placement);

    std::vector<double> point(model.input_specs.size());
    std::vector<double> outputs(reduced_sample.rows());
    for (std::size_t f = 0; f < 5; ++f) {
        for (std::size_t r = 0; r < reduced_sample.rows(); ++r) {
            std::size_t src = 0;
            for (std::size_t i = 0; i < point.size(); ++i) {
                point[i] = i == variable_index ? profile.fix_values[f]
                                               : reduced_sample.input(r, src++);
            }
            outputs[r] = model.evaluate(point);
        }
        const OutputSummary summary =
            summarize_outputs(outputs, settings.conditional_entropy_k, with_curves);
        profile.variances[f] = summary.variance;
        profile.entropies[f] = summary.entropy;
        profile.excess_kurtosis[f] = summary.excess_kurtosis;
        profile.pdf_curves[f] = summary.pdf;
        profile.cdf_curves[f] = summary.cdf;
    }
    return profile;
}

std::vector<RandomVariableSpec> conditional_study_specs(double mu_u) {
    // The conditional-fixing analysis follows the reference study's sampling
    // law: plain normals, with the acceptable ranges widened to mean +- 8 sd
    // (union with the configured range) so truncation is immaterial. Fuel age
    // keeps a small positive floor, the model's validity domain.
    std::vector<RandomVariableSpec> specs = fire_spread_specs(mu_u);
    for (auto& spec : specs) {
        spec.lower = std::min(spec.lower, spec.mean - 8.0 * spec.std_dev);
        spec.upper = std::max(spec.upper, spec.mean + 8.0 * spec.std_dev);
        if (spec.name == "FA") spec.lower = std::max(spec.lower, 0.01);
    }
    return specs;
}

ConditionalProfile conditional_profile(const StudySettings& settings, std::string_view variable,
                                       double mu_u, std::uint64_t seed, bool with_curves) {
    ModelDefinition model = dry_eucalypt_model(mu_u);
    model.input_specs = conditional_study_specs(mu_u);
    for (std::size_t i = 0; i < model.input_specs.size(); ++i) {
        if (model.input_specs[i].name == variable) {
            return conditional_profile_for_model(settings, model, i, seed, with_curves);
        }
    }
    throw std::invalid_argument("conditional_profile: unknown variable '" + std::string(variable) +
                                "'");
}

ConvergenceResult convergence_study(const StudySettings& settings, double mu_u,
                                    std::span<const std::size_t> sample_sizes, int repetitions,
                                    std::uint64_t seed) {
    if (sample_sizes.empty()) throw std::invalid_argument("convergence_study: empty size grid");
    if (repetitions < 1) throw std::invalid_argument("convergence_study: repetitions < 1");

    const ModelDefinition model = dry_eucalypt_model(mu_u);
    ConvergenceResult result;
    result.sample_sizes.assign(sample_sizes.begin(), sample_sizes.end());
    for (const auto& spec : model.input_specs) result.variables.push_back(spec.name);
    const std::size_t n_vars = result.variables.size();

    const Method methods[] = {Method::sobol_total, Method::mi, Method::delta, Method::pawn};
    for (const Method method : methods) {
        auto& means = result.mean_values[method];
        auto& ranks = result.ranks[method];
        means.assign(sample_sizes.size(), std::vector<double>(n_vars, 0.0));
        ranks.resize(sample_sizes.size());
        for (std::size_t j = 0; j < sample_sizes.size(); ++j) {
            for (int r = 0; r < repetitions; ++r) {
                const std::uint64_t rep_seed = convergence_repetition_seed(seed, r);
                const std::vector<double> values =
                    estimate_method_values(settings, model, method, sample_sizes[j], rep_seed);
                for (std::size_t v = 0; v < n_vars; ++v) means[j][v] += values[v];
            }
            for (auto& v : means[j]) v /= static_cast<double>(repetitions);
            ranks[j] = rank_indices(means[j]);
        }
    }
    return result;
}

std::uint64_t convergence_repetition_seed(std::uint64_t master_seed, int repetition) {
    return derive_seed(master_seed, {kTagConvergence, static_cast<std::uint64_t>(repetition)});
}

std::vector<TimingCell> timing_study(const StudySettings& settings,
                                     std::span<const std::size_t> sample_sizes,
                                     std::uint64_t seed, int runs_per_cell) {
    if (runs_per_cell < 1) throw std::invalid_argument("timing_study: runs_per_cell < 1");
    using clock = std::chrono::steady_clock;

    std::vector<TimingCell> cells;
    const Method methods[] = {Method::sobol_total, Method::mi, Method::delta, Method::pawn};
    for (const Method method : methods) {
        for (std::size_t j = 0; j < sample_sizes.size(); ++j) {
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(runs_per_cell));
            for (int run = 0; run < runs_per_cell; ++run) {
                const std::uint64_t run_seed = derive_seed(
                    seed, {kTagTiming, static_cast<std::uint64_t>(method), j,
                           static_cast<std::uint64_t>(run)});
                const ModelDefinition model = dry_eucalypt_model(4.7);
                const auto start = clock::now();
                volatile double sink =
                    estimate_method_values(settings, model, method, sample_sizes[j], run_seed)[0];
                (void)sink;
                const auto stop = clock::now();
                times.push_back(std::chrono::duration<double>(stop - start).count());
            }
            std::sort(times.begin(), times.end());
            cells.push_back({method, sample_sizes[j], quantile_sorted(times, 0.5)});
        }
    }
    return cells;
}

}  // namespace gsa
