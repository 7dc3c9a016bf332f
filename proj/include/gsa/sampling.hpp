#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gsa/distribution.hpp"

namespace gsa {

/// Paired input matrix and output vector from one sampling run.
/// Inputs are stored row-major: rows() samples of cols() variables.
struct SampleSet {
    std::vector<RandomVariableSpec> specs;
    std::vector<double> inputs;
    std::vector<double> outputs;  // empty until a model has been evaluated
    std::uint64_t seed = 0;

    std::size_t cols() const noexcept { return specs.size(); }
    std::size_t rows() const noexcept { return specs.empty() ? 0 : inputs.size() / specs.size(); }

    double input(std::size_t row, std::size_t col) const {
        return inputs[row * specs.size() + col];
    }
    std::span<const double> row(std::size_t r) const {
        return {inputs.data() + r * specs.size(), specs.size()};
    }
};

/// Copy of one input column.
std::vector<double> column(const SampleSet& set, std::size_t col);

enum class LhsPlacement {
    random,    // uniform point inside each stratum (default)
    midpoint,  // stratum centers, for variance-reduction experiments
};

/// Latin hypercube sample of the truncated-normal inputs: per dimension,
/// exactly one point falls in each of the n_samples equal-probability strata.
/// Deterministic given (specs, n_samples, seed). Requires n_samples >= 2.
SampleSet lhs_sample(std::span<const RandomVariableSpec> specs, std::size_t n_samples,
                     std::uint64_t seed, LhsPlacement placement = LhsPlacement::random);

/// The paired/hybrid design for the variance-based estimator: two independent
/// LHS draws plus, per variable i, matrix B with column i replaced by A's
/// column i. Model cost of the full design is (n + 2) * n_samples rows.
struct SobolDesign {
    SampleSet base;                  // A
    SampleSet paired;                // B
    std::vector<SampleSet> hybrids;  // hybrid[i] = B with column i from A
};

SobolDesign sobol_matrices(std::span<const RandomVariableSpec> specs, std::size_t n_samples,
                           std::uint64_t seed, LhsPlacement placement = LhsPlacement::random);

}  // namespace gsa
