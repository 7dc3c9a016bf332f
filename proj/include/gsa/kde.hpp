#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gsa {

/// Evenly spaced evaluation grid.
struct UniformGrid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    double at(std::size_t i) const { return start + step * static_cast<double>(i); }
    std::vector<double> points() const;
};

/// Kernel density values on a grid. The trapezoidal integral over the grid
/// stays within [0.98, 1.02] of one as long as the grid pads the data range
/// by a few bandwidths.
struct DensityEstimate {
    std::vector<double> grid;
    std::vector<double> density;
    double bandwidth = 0.0;
};

/// Silverman's robust rule: 0.9 min(sd, IQR/1.34) n^(-1/5), falling back to
/// sd when the IQR collapses. Throws for samples of fewer than two points.
double silverman_bandwidth(std::span<const double> values);
double silverman_bandwidth_sorted(std::span<const double> ascending_values);

/// Silverman's normal-reference rule, 1.06 sd n^(-1/5): the variant used by
/// the common scientific-python KDE, which smooths heavy-tailed samples much
/// harder than the robust rule.
double normal_reference_bandwidth(std::span<const double> values);

/// Accumulates the Gaussian KDE of data into density (adding to existing
/// contents), normalized so the curve integrates to ~1 per call weight.
/// Kernel tails are cut at 7.5 bandwidths (relative truncation < 1e-12).
void accumulate_gaussian_kde(std::span<const double> data, double bandwidth,
                             const UniformGrid& grid, std::span<double> density);

/// One-shot KDE; bandwidth <= 0 selects Silverman's rule.
DensityEstimate gaussian_kde(std::span<const double> data, const UniformGrid& grid,
                             double bandwidth = 0.0);

/// Trapezoidal integral of values sampled on a uniform grid of spacing step.
double trapezoid_integral(std::span<const double> values, double step);

}  // namespace gsa
