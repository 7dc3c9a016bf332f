#include "gsa/stats.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gsa {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n <= 16) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean: empty sample");
    return pairwise_sum(values) / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("sample_variance: need at least two values");
    const double m = mean(values);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = values[i] - m;
        sq[i] = d * d;
    }
    return pairwise_sum(sq) / static_cast<double>(n - 1);
}

double sample_excess_kurtosis(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 4) throw std::invalid_argument("sample_excess_kurtosis: need at least four values");
    const double m = mean(values);
    std::vector<double> m2(n), m4(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = values[i] - m;
        const double d2 = d * d;
        m2[i] = d2;
        m4[i] = d2 * d2;
    }
    const double v2 = pairwise_sum(m2) / static_cast<double>(n);
    const double v4 = pairwise_sum(m4) / static_cast<double>(n);
    if (v2 <= 0.0) throw std::invalid_argument("sample_excess_kurtosis: constant sample");
    return v4 / (v2 * v2) - 3.0;
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum B_2n / (2n x^2n)
    result += std::log(x) - 0.5 * inv
              - inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
    return result;
}

double quantile_sorted(std::span<const double> sorted_values, double p) {
    if (sorted_values.empty()) throw std::invalid_argument("quantile_sorted: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile_sorted: p outside [0, 1]");
    const std::size_t n = sorted_values.size();
    if (n == 1) return sorted_values[0];
    const double pos = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= n) return sorted_values[n - 1];
    const double frac = pos - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

}  // namespace gsa
