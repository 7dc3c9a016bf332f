#include "gsa/sampling.hpp"

#include <numeric>
#include <stdexcept>

#include "gsa/rng.hpp"

namespace gsa {

namespace {
constexpr std::uint64_t kTagLhs = 0x11;
constexpr std::uint64_t kTagBase = 0;
constexpr std::uint64_t kTagPaired = 1;
}  // namespace

std::vector<double> column(const SampleSet& set, std::size_t col) {
    const std::size_t n = set.rows();
    std::vector<double> out(n);
    for (std::size_t r = 0; r < n; ++r) out[r] = set.input(r, col);
    return out;
}

SampleSet lhs_sample(std::span<const RandomVariableSpec> specs, std::size_t n_samples,
                     std::uint64_t seed, LhsPlacement placement) {
    if (n_samples < 2) throw std::invalid_argument("lhs_sample: need at least two samples");
    for (const auto& spec : specs) spec.validate();

    SampleSet set;
    set.specs.assign(specs.begin(), specs.end());
    set.seed = seed;
    set.inputs.resize(n_samples * specs.size());

    Rng rng(derive_seed(seed, {kTagLhs}));
    std::vector<std::size_t> strata(n_samples);
    const double inv_n = 1.0 / static_cast<double>(n_samples);
    for (std::size_t d = 0; d < specs.size(); ++d) {
        std::iota(strata.begin(), strata.end(), std::size_t{0});
        shuffle(std::span<std::size_t>(strata), rng);
        for (std::size_t r = 0; r < n_samples; ++r) {
            const double within = placement == LhsPlacement::midpoint ? 0.5 : rng.uniform01();
            const double p = (static_cast<double>(strata[r]) + within) * inv_n;
            set.inputs[r * specs.size() + d] = truncnorm_inverse_cdf(p, specs[d]);
        }
    }
    return set;
}

SobolDesign sobol_matrices(std::span<const RandomVariableSpec> specs, std::size_t n_samples,
                           std::uint64_t seed, LhsPlacement placement) {
    SobolDesign design;
    design.base = lhs_sample(specs, n_samples, derive_seed(seed, {kTagBase}), placement);
    design.paired = lhs_sample(specs, n_samples, derive_seed(seed, {kTagPaired}), placement);

    const std::size_t n_vars = specs.size();
    design.hybrids.reserve(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) {
        SampleSet hybrid = design.paired;
        for (std::size_t r = 0; r < n_samples; ++r) {
            hybrid.inputs[r * n_vars + i] = design.base.input(r, i);
        }
        design.hybrids.push_back(std::move(hybrid));
    }
    return design;
}

}  // namespace gsa
