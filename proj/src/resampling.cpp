#include "gsa/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gsa/normal.hpp"
#include "gsa/parallel.hpp"
#include "gsa/rng.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {
constexpr std::uint64_t kTagBootstrap = 0xb0;
constexpr std::uint64_t kTagJackknifeShuffle = 0x1a;
}  // namespace

std::string to_string(Method method) {
    switch (method) {
        case Method::sobol_total: return "sobol_total";
        case Method::sobol_main: return "sobol_main";
        case Method::mi: return "mi";
        case Method::delta: return "delta";
        case Method::pawn: return "pawn";
    }
    return "unknown";
}

std::vector<CiInterval> bootstrap_ci_rows(std::size_t n_rows, const MultiRowStatistic& statistic,
                                          int replications, double level, std::uint64_t seed) {
    if (replications < 100) {
        throw std::invalid_argument("bootstrap_ci: need at least 100 replications");
    }
    if (n_rows == 0) throw std::invalid_argument("bootstrap_ci: empty data");
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("bootstrap_ci: bad level");

    const auto n_reps = static_cast<std::size_t>(replications);
    std::vector<std::vector<double>> replicate_values(n_reps);
    parallel_for_index(n_reps, [&](std::size_t b) {
        Rng rng(derive_seed(seed, {kTagBootstrap, b}));
        const std::vector<std::size_t> rows = resample_indices(n_rows, rng);
        try {
            replicate_values[b] = statistic(rows);
        } catch (const std::exception& e) {
            throw std::runtime_error("bootstrap replicate " + std::to_string(b) + ": " + e.what());
        }
    });

    const std::size_t n_stats = replicate_values[0].size();
    std::vector<CiInterval> intervals(n_stats);
    std::vector<double> values(n_reps);
    for (std::size_t s = 0; s < n_stats; ++s) {
        for (std::size_t b = 0; b < n_reps; ++b) values[b] = replicate_values[b][s];
        std::sort(values.begin(), values.end());
        intervals[s].low = quantile_sorted(values, 0.5 * (1.0 - level));
        intervals[s].high = quantile_sorted(values, 0.5 * (1.0 + level));
    }
    return intervals;
}

CiInterval bootstrap_ci(std::span<const double> data,
                        const std::function<double(std::span<const double>)>& statistic,
                        int replications, double level, std::uint64_t seed) {
    std::vector<CiInterval> intervals = bootstrap_ci_rows(
        data.size(),
        [&](std::span<const std::size_t> rows) {
            std::vector<double> resampled(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) resampled[i] = data[rows[i]];
            return std::vector<double>{statistic(resampled)};
        },
        replications, level, seed);
    return intervals[0];
}

CiInterval grouped_jackknife_ci(
    std::span<const double> x, std::span<const double> y,
    const std::function<double(std::span<const double>, std::span<const double>)>& estimator,
    int groups, double level, std::uint64_t shuffle_seed) {
    const std::size_t n = x.size();
    if (y.size() != n) throw std::invalid_argument("grouped_jackknife_ci: length mismatch");
    if (groups < 2) throw std::invalid_argument("grouped_jackknife_ci: need at least two groups");
    const auto n_groups = static_cast<std::size_t>(groups);
    if (n < 2 * n_groups) {
        throw std::invalid_argument("grouped_jackknife_ci: need at least two points per group");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(derive_seed(shuffle_seed, {kTagJackknifeShuffle}));
    shuffle(std::span<std::size_t>(order), rng);

    const double full = estimator(x, y);

    std::vector<double> leave_out(n_groups);
    parallel_for_index(n_groups, [&](std::size_t g) {
        const std::size_t begin = g * n / n_groups;
        const std::size_t end = (g + 1) * n / n_groups;
        std::vector<double> xr, yr;
        xr.reserve(n - (end - begin));
        yr.reserve(n - (end - begin));
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= begin && i < end) continue;
            xr.push_back(x[order[i]]);
            yr.push_back(y[order[i]]);
        }
        leave_out[g] = estimator(xr, yr);
    });

    const double center = mean(leave_out);
    std::vector<double> sq(n_groups);
    for (std::size_t g = 0; g < n_groups; ++g) {
        const double d = leave_out[g] - center;
        sq[g] = d * d;
    }
    const double g_count = static_cast<double>(n_groups);
    const double variance = (g_count - 1.0) / g_count * pairwise_sum(sq);
    const double half_width = normal_quantile(0.5 * (1.0 + level)) * std::sqrt(variance);
    return {full - half_width, full + half_width};
}

std::vector<int> rank_indices(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("rank_indices: empty input");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] > values[b];  // stable: ties keep declaration order
    });
    std::vector<int> ranks(values.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        ranks[order[pos]] = static_cast<int>(pos) + 1;
    }
    return ranks;
}

}  // namespace gsa
