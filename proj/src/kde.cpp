#include "gsa/kde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsa/stats.hpp"

namespace gsa {

namespace {
constexpr double kKernelCutoff = 7.5;  // in bandwidths
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
}  // namespace

std::vector<double> UniformGrid::points() const {
    std::vector<double> p(count);
    for (std::size_t i = 0; i < count; ++i) p[i] = at(i);
    return p;
}

double silverman_bandwidth_sorted(std::span<const double> ascending_values) {
    const std::size_t n = ascending_values.size();
    if (n < 2) throw std::invalid_argument("silverman_bandwidth: need at least two values");
    const double sd = std::sqrt(sample_variance(ascending_values));
    const double iqr =
        quantile_sorted(ascending_values, 0.75) - quantile_sorted(ascending_values, 0.25);
    double scale = sd;
    if (iqr > 0.0) scale = std::min(scale, iqr / 1.34);
    if (!(scale > 0.0)) throw std::invalid_argument("silverman_bandwidth: constant sample");
    return 0.9 * scale * std::pow(static_cast<double>(n), -0.2);
}

double silverman_bandwidth(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return silverman_bandwidth_sorted(sorted);
}

double normal_reference_bandwidth(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("normal_reference_bandwidth: need at least two values");
    }
    const double sd = std::sqrt(sample_variance(values));
    if (!(sd > 0.0)) throw std::invalid_argument("normal_reference_bandwidth: constant sample");
    return 1.06 * sd * std::pow(static_cast<double>(values.size()), -0.2);
}

void accumulate_gaussian_kde(std::span<const double> data, double bandwidth,
                             const UniformGrid& grid, std::span<double> density) {
    if (density.size() != grid.count) {
        throw std::invalid_argument("accumulate_gaussian_kde: density size mismatch");
    }
    if (!(bandwidth > 0.0)) throw std::invalid_argument("accumulate_gaussian_kde: bad bandwidth");
    const double weight = kInvSqrt2Pi / (bandwidth * static_cast<double>(data.size()));
    const double inv_h = 1.0 / bandwidth;
    const double reach = kKernelCutoff * bandwidth;
    for (const double x : data) {
        const double lo = (x - reach - grid.start) / grid.step;
        const double hi = (x + reach - grid.start) / grid.step;
        const std::size_t first = lo <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(lo));
        if (first >= grid.count) continue;
        const std::size_t last =
            hi < 0.0 ? 0 : std::min(grid.count - 1, static_cast<std::size_t>(std::floor(hi)));
        for (std::size_t g = first; g <= last && g < grid.count; ++g) {
            const double z = (grid.at(g) - x) * inv_h;
            density[g] += weight * std::exp(-0.5 * z * z);
        }
    }
}

DensityEstimate gaussian_kde(std::span<const double> data, const UniformGrid& grid,
                             double bandwidth) {
    if (data.empty()) throw std::invalid_argument("gaussian_kde: empty sample");
    const double h = bandwidth > 0.0 ? bandwidth : silverman_bandwidth(data);
    DensityEstimate estimate;
    estimate.bandwidth = h;
    estimate.grid = grid.points();
    estimate.density.assign(grid.count, 0.0);
    accumulate_gaussian_kde(data, h, grid, estimate.density);
    return estimate;
}

double trapezoid_integral(std::span<const double> values, double step) {
    if (values.size() < 2) return 0.0;
    std::vector<double> terms(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        terms[i] = 0.5 * (values[i] + values[i + 1]);
    }
    return pairwise_sum(terms) * step;
}

}  // namespace gsa
