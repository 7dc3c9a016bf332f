#include "gsa/moment_independent.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "gsa/errors.hpp"
#include "gsa/kde.hpp"
#include "gsa/rng.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

constexpr double kJitterScale = 1e-10;

void add_jitter(std::span<double> values, Rng& rng) {
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double magnitude = kJitterScale * (*hi - *lo);
    if (magnitude <= 0.0) return;
    for (double& v : values) v += magnitude * (2.0 * rng.uniform01() - 1.0);
}

void standardize(std::span<double> values) {
    const double m = mean(values);
    const double sd = std::sqrt(sample_variance(values));
    if (!(sd > 0.0)) {
        throw degenerate_data_error("knn_mutual_information: constant marginal sample");
    }
    for (double& v : values) v = (v - m) / sd;
}

/// Keeps the k smallest distances seen so far (k is tiny, so a linear pass
/// beats a heap).
class KSmallest {
public:
    explicit KSmallest(int k) : capacity_(static_cast<std::size_t>(k)) { values_.reserve(capacity_); }

    bool full() const noexcept { return values_.size() == capacity_; }
    double worst() const noexcept { return worst_; }

    void offer(double d) {
        if (!full()) {
            values_.push_back(d);
            if (values_.size() == capacity_ || d > worst_) {
                worst_ = *std::max_element(values_.begin(), values_.end());
            }
            return;
        }
        if (d >= worst_) return;
        auto it = std::max_element(values_.begin(), values_.end());
        *it = d;
        worst_ = *std::max_element(values_.begin(), values_.end());
    }

private:
    std::size_t capacity_;
    std::vector<double> values_;
    double worst_ = -1.0;
};

/// Count of sorted values strictly inside (center - eps, center + eps),
/// excluding one occurrence for the query point itself.
std::size_t count_within_open(const std::vector<double>& sorted, double center, double eps) {
    const auto first = std::upper_bound(sorted.begin(), sorted.end(), center - eps);
    const auto last = std::lower_bound(sorted.begin(), sorted.end(), center + eps);
    const auto n = static_cast<std::size_t>(std::distance(first, last));
    return n == 0 ? 0 : n - 1;
}

}  // namespace

double differential_entropy(std::span<const double> values, int k, std::uint64_t jitter_seed) {
    const std::size_t n = values.size();
    if (k < 1) throw std::invalid_argument("differential_entropy: k must be positive");
    if (n < static_cast<std::size_t>(k) + 2) {
        throw std::invalid_argument("differential_entropy: sample too small for k neighbors");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) {
        throw degenerate_data_error("differential_entropy: all values identical");
    }

    std::vector<double> work(values.begin(), values.end());
    Rng rng(derive_seed(jitter_seed, {n}));
    add_jitter(work, rng);
    std::sort(work.begin(), work.end());

    // kth-nearest distance in 1D: merge the k left and k right neighbors.
    std::vector<double> log_terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t left = i, right = i;
        double eps = 0.0;
        for (int taken = 0; taken < k; ++taken) {
            const double dl = left > 0 ? work[i] - work[left - 1] : -1.0;
            const double dr = right + 1 < n ? work[right + 1] - work[i] : -1.0;
            if (dl >= 0.0 && (dr < 0.0 || dl <= dr)) {
                eps = dl;
                --left;
            } else {
                eps = dr;
                ++right;
            }
        }
        log_terms[i] = std::log(2.0 * eps);
    }
    return digamma(static_cast<double>(n)) - digamma(static_cast<double>(k)) +
           pairwise_sum(log_terms) / static_cast<double>(n);
}

double knn_mutual_information(std::span<const double> x, std::span<const double> y, int k,
                              std::uint64_t jitter_seed) {
    const std::size_t n = x.size();
    if (y.size() != n) throw std::invalid_argument("knn_mutual_information: length mismatch");
    if (k < 1) throw std::invalid_argument("knn_mutual_information: k must be positive");
    if (n < static_cast<std::size_t>(k) + 2) {
        throw std::invalid_argument("knn_mutual_information: sample too small for k neighbors");
    }

    std::vector<double> xw(x.begin(), x.end());
    std::vector<double> yw(y.begin(), y.end());
    standardize(xw);
    standardize(yw);
    Rng rng(derive_seed(jitter_seed, {n, 0x78u}));
    add_jitter(xw, rng);
    add_jitter(yw, rng);

    // Points in ascending-x order; the joint kth-neighbor search walks this
    // ordering outward and can stop once the x gap alone exceeds the current
    // kth max-norm distance.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xw[a] < xw[b]; });
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = xw[order[i]];
        ys[i] = yw[order[i]];
    }
    std::vector<double> sorted_y(yw);
    std::sort(sorted_y.begin(), sorted_y.end());

    std::vector<double> psi_terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        KSmallest nearest(k);
        std::size_t left = i, right = i;
        while (true) {
            const double dl = left > 0 ? xs[i] - xs[left - 1] : -1.0;
            const double dr = right + 1 < n ? xs[right + 1] - xs[i] : -1.0;
            if (dl < 0.0 && dr < 0.0) break;
            const bool take_left = dl >= 0.0 && (dr < 0.0 || dl <= dr);
            const double dx = take_left ? dl : dr;
            if (nearest.full() && dx >= nearest.worst()) break;
            const std::size_t j = take_left ? --left : ++right;
            nearest.offer(std::max(dx, std::abs(ys[j] - ys[i])));
        }
        const double eps = nearest.worst();
        const auto nx = static_cast<double>(count_within_open(xs, xs[i], eps));
        const auto ny = static_cast<double>(count_within_open(sorted_y, ys[i], eps));
        psi_terms[i] = digamma(nx + 1.0) + digamma(ny + 1.0);
    }

    const double mi = digamma(static_cast<double>(k)) + digamma(static_cast<double>(n)) -
                      pairwise_sum(psi_terms) / static_cast<double>(n);
    if (mi < -0.05) {
        // Diagnostics only; capped so resampling loops cannot flood stderr.
        static std::atomic<int> warnings_left{3};
        const int remaining = warnings_left.fetch_sub(1);
        if (remaining > 0) {
            std::cerr << "warning: mutual information estimate " << mi
                      << " is well below zero; sample may be too small or heavily tied"
                      << (remaining == 1 ? " (further warnings suppressed)" : "") << "\n";
        }
    }
    return mi;
}

NormalizedMi normalize_mi(double mi_nats) {
    if (mi_nats < 0.0) {
        return {0.0, true};
    }
    return {std::sqrt(1.0 - std::exp(-2.0 * mi_nats)), false};
}

std::size_t delta_auto_partitions(std::size_t n) {
    const double nd = static_cast<double>(n);
    const double exponent = 2.0 / (7.0 + std::tanh((1500.0 - nd) / 500.0));
    const double classes = std::ceil(std::pow(nd, exponent));
    return std::max<std::size_t>(2, std::min<std::size_t>(48, static_cast<std::size_t>(classes)));
}

std::vector<double> delta_given_data_multi(const std::vector<std::vector<double>>& columns,
                                           std::span<const double> y,
                                           const DeltaOptions& options) {
    const std::size_t n = y.size();
    const std::size_t m_classes =
        options.partitions == 0 ? delta_auto_partitions(n) : options.partitions;
    if (m_classes < 2) throw std::invalid_argument("delta: need at least two partitions");
    if (n < 50 * m_classes) {
        throw std::invalid_argument("delta: need at least 50 points per partition");
    }
    for (const auto& col : columns) {
        if (col.size() != n) throw std::invalid_argument("delta: column length mismatch");
    }

    const bool robust = options.bandwidth_rule == KdeBandwidthRule::robust;
    std::vector<double> sorted_y(y.begin(), y.end());
    std::sort(sorted_y.begin(), sorted_y.end());
    const double h_marginal =
        robust ? silverman_bandwidth_sorted(sorted_y) : normal_reference_bandwidth(sorted_y);

    UniformGrid grid;
    grid.count = options.grid_points;
    grid.start = sorted_y.front() - options.pad_bandwidths * h_marginal;
    const double stop = sorted_y.back() + options.pad_bandwidths * h_marginal;
    grid.step = (stop - grid.start) / static_cast<double>(grid.count - 1);

    std::vector<double> marginal(grid.count, 0.0);
    accumulate_gaussian_kde(y, h_marginal, grid, marginal);

    std::vector<double> deltas;
    deltas.reserve(columns.size());
    std::vector<std::size_t> order(n);
    std::vector<double> class_y, conditional(grid.count), abs_diff(grid.count);
    for (const auto& col : columns) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });

        double weighted_l1 = 0.0;
        std::size_t begin = 0;
        for (std::size_t m = 0; m < m_classes; ++m) {
            std::size_t end = (m + 1) * n / m_classes;
            // Ties straddling a boundary stay with the lower class.
            while (end < n && end > 0 && col[order[end]] == col[order[end - 1]]) ++end;
            if (m + 1 == m_classes) end = n;
            if (begin >= end) continue;
            if (end - begin < 2) {
                throw std::invalid_argument("delta: a partition has fewer than two samples");
            }
            class_y.clear();
            for (std::size_t r = begin; r < end; ++r) class_y.push_back(y[order[r]]);
            std::sort(class_y.begin(), class_y.end());
            const double h_class =
                robust ? silverman_bandwidth_sorted(class_y) : normal_reference_bandwidth(class_y);

            std::fill(conditional.begin(), conditional.end(), 0.0);
            accumulate_gaussian_kde(class_y, h_class, grid, conditional);
            for (std::size_t g = 0; g < grid.count; ++g) {
                abs_diff[g] = std::abs(marginal[g] - conditional[g]);
            }
            const double w = static_cast<double>(end - begin) / static_cast<double>(n);
            weighted_l1 += w * trapezoid_integral(abs_diff, grid.step);
            begin = end;
        }
        deltas.push_back(0.5 * weighted_l1);
    }
    return deltas;
}

double delta_given_data(std::span<const double> x, std::span<const double> y,
                        std::size_t partitions) {
    DeltaOptions options;
    options.partitions = partitions;
    std::vector<std::vector<double>> columns{std::vector<double>(x.begin(), x.end())};
    return delta_given_data_multi(columns, y, options)[0];
}

}  // namespace gsa
