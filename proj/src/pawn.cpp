#include "gsa/pawn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gsa/stats.hpp"

namespace gsa {

double ks_distance(std::span<const double> sample_a, std::span<const double> sample_b) {
    if (sample_a.empty() || sample_b.empty()) {
        throw std::invalid_argument("ks_distance: empty sample");
    }
    std::vector<double> a(sample_a.begin(), sample_a.end());
    std::vector<double> b(sample_b.begin(), sample_b.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const double inv_na = 1.0 / static_cast<double>(a.size());
    const double inv_nb = 1.0 / static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double distance = 0.0;
    while (i < a.size() || j < b.size()) {
        double t;
        if (i < a.size() && j < b.size()) {
            t = std::min(a[i], b[j]);
        } else if (i < a.size()) {
            t = a[i];
        } else {
            t = b[j];
        }
        while (i < a.size() && a[i] == t) ++i;
        while (j < b.size() && b[j] == t) ++j;
        distance = std::max(distance,
                            std::abs(static_cast<double>(i) * inv_na -
                                     static_cast<double>(j) * inv_nb));
    }
    return distance;
}

std::string to_string(PawnStat stat) {
    switch (stat) {
        case PawnStat::mean: return "mean";
        case PawnStat::median: return "median";
        case PawnStat::max: return "max";
    }
    return "mean";
}

std::string to_string(PawnIntervalScheme scheme) {
    return scheme == PawnIntervalScheme::equal_width ? "width" : "count";
}

PawnWorkspace make_pawn_workspace(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pawn: length mismatch");
    PawnWorkspace ws;
    ws.n_rows = x.size();
    ws.rows_by_x.resize(ws.n_rows);
    std::iota(ws.rows_by_x.begin(), ws.rows_by_x.end(), 0u);
    std::stable_sort(ws.rows_by_x.begin(), ws.rows_by_x.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return x[a] < x[b]; });
    ws.x_by_rank.resize(ws.n_rows);
    for (std::size_t r = 0; r < ws.n_rows; ++r) ws.x_by_rank[r] = x[ws.rows_by_x[r]];

    ws.rows_by_y.resize(ws.n_rows);
    std::iota(ws.rows_by_y.begin(), ws.rows_by_y.end(), 0u);
    std::stable_sort(ws.rows_by_y.begin(), ws.rows_by_y.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return y[a] < y[b]; });
    return ws;
}

std::vector<double> pawn_interval_ks(const PawnWorkspace& workspace,
                                     std::span<const std::uint32_t> counts_by_row,
                                     std::size_t n_intervals, PawnIntervalScheme scheme) {
    if (n_intervals < 2) throw std::invalid_argument("pawn: need at least two intervals");
    const std::size_t n = workspace.n_rows;
    const bool weighted = !counts_by_row.empty();
    if (weighted && counts_by_row.size() != n) {
        throw std::invalid_argument("pawn: counts length mismatch");
    }

    std::uint64_t total = n;
    if (weighted) {
        total = 0;
        for (const auto c : counts_by_row) total += c;
    }
    if (total == 0) throw std::invalid_argument("pawn: empty resample");

    // Pass 1 over ascending x: assign each row to a conditioning interval.
    // A boundary never splits tied x values; ties stay in the lower interval.
    std::vector<std::uint16_t> interval_of_row(n, 0);
    std::vector<std::uint64_t> interval_total(n_intervals, 0);
    if (scheme == PawnIntervalScheme::equal_count) {
        std::size_t interval = 0;
        std::uint64_t cum = 0;
        std::uint64_t next_target = (total + n_intervals - 1) / n_intervals;
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint32_t row = workspace.rows_by_x[r];
            const std::uint64_t c = weighted ? counts_by_row[row] : 1;
            if (cum >= next_target && interval + 1 < n_intervals &&
                (r == 0 || workspace.x_by_rank[r] != workspace.x_by_rank[r - 1])) {
                ++interval;
                next_target = (total * (interval + 1) + n_intervals - 1) / n_intervals;
            }
            interval_of_row[row] = static_cast<std::uint16_t>(interval);
            interval_total[interval] += c;
            cum += c;
        }
    } else {
        // Equal-width intervals over the (resampled) range of x.
        std::size_t first = 0;
        std::size_t last = n - 1;
        if (weighted) {
            while (first < last && counts_by_row[workspace.rows_by_x[first]] == 0) ++first;
            while (last > first && counts_by_row[workspace.rows_by_x[last]] == 0) --last;
        }
        const double x_min = workspace.x_by_rank[first];
        const double x_max = workspace.x_by_rank[last];
        const double width = (x_max - x_min) / static_cast<double>(n_intervals);
        for (std::size_t r = 0; r < n; ++r) {
            const std::uint32_t row = workspace.rows_by_x[r];
            const std::uint64_t c = weighted ? counts_by_row[row] : 1;
            std::size_t interval = 0;
            if (width > 0.0 && workspace.x_by_rank[r] > x_min) {
                const double steps = (workspace.x_by_rank[r] - x_min) / width;
                interval = static_cast<std::size_t>(std::ceil(steps)) - 1;
                interval = std::min(interval, n_intervals - 1);
            }
            interval_of_row[row] = static_cast<std::uint16_t>(interval);
            interval_total[interval] += c;
        }
    }

    // Pass 2 over ascending y: track unconditional and per-interval CDFs.
    // Both step at the same points (the conditional samples are subsets), so
    // each interval's sup gap is attained just before or just after one of
    // its own jumps.
    std::vector<double> ks(n_intervals, 0.0);
    std::vector<std::uint64_t> interval_cum(n_intervals, 0);
    std::uint64_t all_cum = 0;
    const double inv_total = 1.0 / static_cast<double>(total);
    for (std::size_t r = 0; r < n; ++r) {
        const std::uint32_t row = workspace.rows_by_y[r];
        const std::uint64_t c = weighted ? counts_by_row[row] : 1;
        if (c == 0) continue;
        const std::size_t m = interval_of_row[row];
        if (interval_total[m] == 0) continue;
        const double inv_m = 1.0 / static_cast<double>(interval_total[m]);
        const double before = static_cast<double>(all_cum) * inv_total -
                              static_cast<double>(interval_cum[m]) * inv_m;
        all_cum += c;
        interval_cum[m] += c;
        const double after = static_cast<double>(interval_cum[m]) * inv_m -
                             static_cast<double>(all_cum) * inv_total;
        ks[m] = std::max(ks[m], std::max(before, after));
    }
    return ks;
}

double pawn_statistic(std::span<const double> interval_ks, PawnStat stat) {
    switch (stat) {
        case PawnStat::max:
            return *std::max_element(interval_ks.begin(), interval_ks.end());
        case PawnStat::median: {
            std::vector<double> sorted(interval_ks.begin(), interval_ks.end());
            std::sort(sorted.begin(), sorted.end());
            return quantile_sorted(sorted, 0.5);
        }
        case PawnStat::mean:
            break;
    }
    return mean(interval_ks);
}

PawnEstimate pawn_given_data(std::span<const double> x, std::span<const double> y,
                             std::size_t n_intervals, PawnStat stat, std::string variable,
                             PawnIntervalScheme scheme) {
    if (n_intervals < 2) throw std::invalid_argument("pawn: need at least two intervals");
    if (x.size() != y.size()) throw std::invalid_argument("pawn: length mismatch");
    if (x.size() < 20 * n_intervals) {
        throw std::invalid_argument("pawn: need at least 20 points per interval");
    }
    const PawnWorkspace ws = make_pawn_workspace(x, y);
    PawnEstimate estimate;
    estimate.variable = std::move(variable);
    estimate.stat = stat;
    estimate.per_interval_ks = pawn_interval_ks(ws, {}, n_intervals, scheme);
    estimate.value = pawn_statistic(estimate.per_interval_ks, stat);
    return estimate;
}

}  // namespace gsa
