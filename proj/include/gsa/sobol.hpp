#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsa/models.hpp"

namespace gsa {

/// Variance-based sensitivity of one variable.
struct SobolEstimate {
    std::string variable;
    double main_effect = 0.0;
    double total_effect = 0.0;
    std::size_t n_evaluations = 0;
    /// Monte Carlo noise can push estimates slightly negative; they are
    /// reported unclipped with this flag set rather than hidden.
    bool negative_estimate = false;
};

/// Stored model outputs over the paired/hybrid design, kept so resampling can
/// re-estimate indices without re-running the model.
struct SobolEvaluations {
    std::vector<std::string> variables;
    std::vector<double> base;                 // f over rows of A
    std::vector<double> paired;               // f over rows of B
    std::vector<std::vector<double>> hybrid;  // hybrid[i]: f over B with column i from A
};

/// Samples the (n+2)*n_samples design and evaluates the model on it.
SobolEvaluations evaluate_sobol_design(const ModelDefinition& model, std::size_t n_samples,
                                       std::uint64_t seed,
                                       LhsPlacement placement = LhsPlacement::random);

/// Main effect per variable from base_k * (hybrid_k - paired_k) / (N V), and
/// total effect from (hybrid_k - paired_k)^2 / (2 N V). The variance
/// denominator pools the 2N base and paired outputs. Throws
/// degenerate_data_error when the pooled output variance vanishes
/// (below 1e-12 * mean^2).
std::vector<SobolEstimate> sobol_from_evaluations(const SobolEvaluations& evals);

/// Same estimator over a row resample (shared across base/paired/hybrids).
std::vector<SobolEstimate> sobol_from_evaluations(const SobolEvaluations& evals,
                                                  std::span<const std::size_t> rows);

/// End-to-end estimation: (n+2)*n_samples model evaluations, deterministic
/// given the seed. Requires n_samples >= 100.
std::vector<SobolEstimate> estimate_sobol(const ModelDefinition& model, std::size_t n_samples,
                                          std::uint64_t seed);

}  // namespace gsa
