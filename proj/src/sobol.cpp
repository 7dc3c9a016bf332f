#include "gsa/sobol.hpp"

#include <cmath>
#include <stdexcept>

#include "gsa/errors.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

std::vector<SobolEstimate> estimate_from_rows(const SobolEvaluations& evals,
                                              std::span<const std::size_t> rows) {
    const std::size_t n_rows = rows.empty() ? evals.base.size() : rows.size();
    const std::size_t n_vars = evals.hybrid.size();
    auto row_at = [&](std::size_t k) { return rows.empty() ? k : rows[k]; };

    // Pooled variance of the 2N base/paired outputs (the denominator of both
    // index formulas).
    std::vector<double> pooled(2 * n_rows);
    for (std::size_t k = 0; k < n_rows; ++k) {
        pooled[k] = evals.base[row_at(k)];
        pooled[n_rows + k] = evals.paired[row_at(k)];
    }
    const double pooled_mean = mean(pooled);
    const double variance = sample_variance(pooled);
    if (variance <= 1e-12 * pooled_mean * pooled_mean || variance <= 0.0) {
        throw degenerate_data_error(
            "sobol estimator: output variance is (near) zero, indices undefined");
    }

    std::vector<SobolEstimate> estimates(n_vars);
    std::vector<double> main_terms(n_rows), total_terms(n_rows);
    for (std::size_t i = 0; i < n_vars; ++i) {
        const auto& hybrid = evals.hybrid[i];
        for (std::size_t k = 0; k < n_rows; ++k) {
            const std::size_t r = row_at(k);
            const double delta = hybrid[r] - evals.paired[r];
            main_terms[k] = evals.base[r] * delta;
            total_terms[k] = delta * delta;
        }
        SobolEstimate& est = estimates[i];
        est.variable = evals.variables[i];
        est.main_effect = pairwise_sum(main_terms) / (static_cast<double>(n_rows) * variance);
        est.total_effect =
            pairwise_sum(total_terms) / (2.0 * static_cast<double>(n_rows) * variance);
        est.n_evaluations = (n_vars + 2) * n_rows;
        est.negative_estimate = est.main_effect < 0.0 || est.total_effect < 0.0;
    }
    return estimates;
}

}  // namespace

SobolEvaluations evaluate_sobol_design(const ModelDefinition& model, std::size_t n_samples,
                                       std::uint64_t seed, LhsPlacement placement) {
    SobolDesign design = sobol_matrices(model.input_specs, n_samples, seed, placement);
    SobolEvaluations evals;
    for (const auto& spec : model.input_specs) evals.variables.push_back(spec.name);

    evaluate_model(model, design.base);
    evals.base = std::move(design.base.outputs);
    evaluate_model(model, design.paired);
    evals.paired = std::move(design.paired.outputs);
    evals.hybrid.reserve(design.hybrids.size());
    for (auto& hybrid : design.hybrids) {
        evaluate_model(model, hybrid);
        evals.hybrid.push_back(std::move(hybrid.outputs));
    }
    return evals;
}

std::vector<SobolEstimate> sobol_from_evaluations(const SobolEvaluations& evals) {
    return estimate_from_rows(evals, {});
}

std::vector<SobolEstimate> sobol_from_evaluations(const SobolEvaluations& evals,
                                                  std::span<const std::size_t> rows) {
    return estimate_from_rows(evals, rows);
}

std::vector<SobolEstimate> estimate_sobol(const ModelDefinition& model, std::size_t n_samples,
                                          std::uint64_t seed) {
    if (n_samples < 100) {
        throw std::invalid_argument("estimate_sobol: need at least 100 samples");
    }
    return sobol_from_evaluations(evaluate_sobol_design(model, n_samples, seed));
}

}  // namespace gsa
