#pragma once

// Numerical oracles used only by tests. They are deliberately independent of
// the library code paths they check: plain Simpson/Gauss-Legendre quadrature
// over raw densities, no shared special functions.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "gsa/distribution.hpp"

namespace oracles {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int intervals = 4000) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        acc += f(a + h * static_cast<double>(i)) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return acc * h / 3.0;
}

inline double normal_density(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(8.0 * std::atan(1.0));
}

inline double quadrature_truncnorm_mass(const gsa::RandomVariableSpec& spec) {
    return simpson(
        [&](double t) { return normal_density((t - spec.mean) / spec.std_dev) / spec.std_dev; },
        spec.lower, spec.upper);
}

inline double quadrature_truncnorm_cdf(double x, const gsa::RandomVariableSpec& spec) {
    if (x <= spec.lower) return 0.0;
    if (x >= spec.upper) return 1.0;
    const double part = simpson(
        [&](double t) { return normal_density((t - spec.mean) / spec.std_dev) / spec.std_dev; },
        spec.lower, x);
    return part / quadrature_truncnorm_mass(spec);
}

inline double quadrature_truncnorm_quantile(double p, const gsa::RandomVariableSpec& spec) {
    double lo = spec.lower;
    double hi = spec.upper;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (quadrature_truncnorm_cdf(mid, spec) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline double quadrature_truncnorm_mean(const gsa::RandomVariableSpec& spec) {
    const double raw = simpson(
        [&](double t) {
            return t * normal_density((t - spec.mean) / spec.std_dev) / spec.std_dev;
        },
        spec.lower, spec.upper);
    return raw / quadrature_truncnorm_mass(spec);
}

inline double quadrature_truncnorm_sd(const gsa::RandomVariableSpec& spec) {
    const double m = quadrature_truncnorm_mean(spec);
    const double raw = simpson(
        [&](double t) {
            return (t - m) * (t - m) * normal_density((t - spec.mean) / spec.std_dev) /
                   spec.std_dev;
        },
        spec.lower, spec.upper);
    return std::sqrt(raw / quadrature_truncnorm_mass(spec));
}

inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pi = 4.0 * std::atan(1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            derivative = n * (z * p0 - p1) / (z * z - 1.0);
            const double previous = z;
            z -= p0 / derivative;
            if (std::abs(z - previous) < 1e-15) break;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * derivative * derivative);
        weights[n - 1 - i] = weights[i];
    }
}

struct SobolOracle {
    std::array<double, 3> main{};
    std::array<double, 3> total{};
    double variance = 0.0;
};

/// Variance-based indices of a 3-input function with independent uniform
/// inputs on [lo, hi], by tensor-grid Gauss-Legendre integration of the
/// conditional means and variances.
inline SobolOracle sobol_by_quadrature_3d(const std::function<double(double, double, double)>& f,
                                          double lo, double hi, int n_nodes = 48) {
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(n_nodes, gl_nodes, gl_weights);
    std::vector<double> t(n_nodes), w(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        t[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl_nodes[i];
        w[i] = 0.5 * gl_weights[i];  // probability weights: sum to 1
    }

    auto value = [&](int a, int b, int c) { return f(t[a], t[b], t[c]); };

    double grand_mean = 0.0;
    double second_moment = 0.0;
    for (int a = 0; a < n_nodes; ++a) {
        for (int b = 0; b < n_nodes; ++b) {
            for (int c = 0; c < n_nodes; ++c) {
                const double y = value(a, b, c);
                const double weight = w[a] * w[b] * w[c];
                grand_mean += weight * y;
                second_moment += weight * y * y;
            }
        }
    }
    SobolOracle oracle;
    oracle.variance = second_moment - grand_mean * grand_mean;

    for (int dim = 0; dim < 3; ++dim) {
        auto reorder = [&](int i, int j, int k) {
            // i indexes `dim`, (j, k) the remaining axes in order.
            switch (dim) {
                case 0: return value(i, j, k);
                case 1: return value(j, i, k);
                default: return value(j, k, i);
            }
        };

        // Main effect: variance over x_dim of E[Y | x_dim].
        double cond_var_of_mean = 0.0;
        for (int i = 0; i < n_nodes; ++i) {
            double cond_mean = 0.0;
            for (int j = 0; j < n_nodes; ++j) {
                for (int k = 0; k < n_nodes; ++k) {
                    cond_mean += w[j] * w[k] * reorder(i, j, k);
                }
            }
            const double centered = cond_mean - grand_mean;
            cond_var_of_mean += w[i] * centered * centered;
        }
        oracle.main[dim] = cond_var_of_mean / oracle.variance;

        // Total effect: expectation over x_-dim of Var[Y | x_-dim].
        double mean_cond_var = 0.0;
        for (int j = 0; j < n_nodes; ++j) {
            for (int k = 0; k < n_nodes; ++k) {
                double cond_mean = 0.0;
                double cond_sq = 0.0;
                for (int i = 0; i < n_nodes; ++i) {
                    const double y = reorder(i, j, k);
                    cond_mean += w[i] * y;
                    cond_sq += w[i] * y * y;
                }
                mean_cond_var += w[j] * w[k] * (cond_sq - cond_mean * cond_mean);
            }
        }
        oracle.total[dim] = mean_cond_var / oracle.variance;
    }
    return oracle;
}

}  // namespace oracles
