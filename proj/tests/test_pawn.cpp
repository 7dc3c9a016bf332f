#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsa/pawn.hpp"
#include "gsa/rng.hpp"

namespace {

std::vector<double> uniform_draws(std::size_t n, std::uint64_t seed) {
    gsa::Rng rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = rng.uniform01();
    return out;
}

}  // namespace

TEST_CASE("ks distance basics") {
    const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    CHECK(gsa::ks_distance(a, a) == doctest::Approx(0.0));

    const std::vector<double> low{1.0, 2.0};
    const std::vector<double> high{5.0, 6.0, 7.0};
    CHECK(gsa::ks_distance(low, high) == doctest::Approx(1.0));

    // Enumerating both step functions by hand gives 0.5.
    const std::vector<double> b{3.0, 4.0, 5.0, 6.0};
    CHECK(gsa::ks_distance(a, b) == doctest::Approx(0.5));

    CHECK_THROWS_AS(gsa::ks_distance({}, a), std::invalid_argument);
    CHECK_THROWS_AS(gsa::ks_distance(a, {}), std::invalid_argument);
}

TEST_CASE("ks distance handles unequal sizes and ties") {
    const std::vector<double> a{1.0, 1.0, 2.0};
    const std::vector<double> b{1.0, 2.0, 2.0, 3.0};
    // After t=1: |2/3 - 1/4| = 5/12; after t=2: |1 - 3/4| = 1/4; after t=3: 0.
    CHECK(gsa::ks_distance(a, b) == doctest::Approx(5.0 / 12.0));
}

TEST_CASE("pawn on an independent pair is small") {
    const auto x = uniform_draws(100000, 1);
    const auto y = uniform_draws(100000, 2);
    const gsa::PawnEstimate estimate = gsa::pawn_given_data(x, y);
    CHECK(estimate.value < 0.03);
    CHECK(estimate.per_interval_ks.size() == 10);
}

TEST_CASE("pawn on the identity map matches the interval enumeration") {
    // For y = x with uniform x and ten intervals, interval j has
    // KS = max(j, 9 - j) / 10, whose mean is 0.7.
    const auto x = uniform_draws(100000, 3);
    const gsa::PawnEstimate estimate = gsa::pawn_given_data(x, x, 10);
    CHECK(estimate.value == doctest::Approx(0.7).epsilon(0.03 / 0.7));
    for (std::size_t j = 0; j < 10; ++j) {
        const double expected = std::max<double>(j, 9 - j) / 10.0;
        CHECK(std::abs(estimate.per_interval_ks[j] - expected) < 0.03);
    }
}

TEST_CASE("pawn statistics ordering") {
    const auto x = uniform_draws(4000, 4);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::cos(3.0 * x[i]);
    const auto mean_est = gsa::pawn_given_data(x, y, 10, gsa::PawnStat::mean);
    const auto max_est = gsa::pawn_given_data(x, y, 10, gsa::PawnStat::max);
    const auto median_est = gsa::pawn_given_data(x, y, 10, gsa::PawnStat::median);
    CHECK(max_est.value >= mean_est.value);
    CHECK(mean_est.value >= 0.0);
    CHECK(median_est.value <= max_est.value);
    for (double ks : mean_est.per_interval_ks) {
        CHECK(ks >= 0.0);
        CHECK(ks <= 1.0);
    }
}

TEST_CASE("pawn is bit-exact under strictly monotone output transforms") {
    const auto x = uniform_draws(20000, 5);
    std::vector<double> y(x.size());
    gsa::Rng rng(6);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + 0.2 * rng.uniform01();
    std::vector<double> exp_y = y;
    for (auto& v : exp_y) v = std::exp(v);

    const auto base = gsa::pawn_given_data(x, y);
    const auto transformed = gsa::pawn_given_data(x, exp_y);
    CHECK(base.value == transformed.value);  // exact: KS depends only on ranks
    CHECK(base.per_interval_ks == transformed.per_interval_ks);
}

TEST_CASE("pawn input validation") {
    const auto x = uniform_draws(300, 7);
    const auto y = uniform_draws(300, 8);
    CHECK_THROWS_AS(gsa::pawn_given_data(x, y, 1), std::invalid_argument);
    CHECK_THROWS_AS(gsa::pawn_given_data(x, y, 20), std::invalid_argument);
    CHECK_THROWS_AS(gsa::pawn_given_data(x, uniform_draws(200, 9)), std::invalid_argument);
}

TEST_CASE("equal-count scheme balances interval populations") {
    const auto x = uniform_draws(5000, 10);
    const auto y = uniform_draws(5000, 11);
    const gsa::PawnWorkspace ws = gsa::make_pawn_workspace(x, y);
    const auto ks = gsa::pawn_interval_ks(ws, {}, 10, gsa::PawnIntervalScheme::equal_count);
    CHECK(ks.size() == 10);
    for (double v : ks) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("bootstrap counts path agrees with explicit resampling") {
    const std::size_t n = 3000;
    const auto x = uniform_draws(n, 12);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * x[i] + 0.1 * y.size();
    const gsa::PawnWorkspace ws = gsa::make_pawn_workspace(x, y);

    gsa::Rng rng(13);
    std::vector<std::uint32_t> counts(n, 0);
    std::vector<double> xr, yr;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<std::size_t>(rng.uniform_below(n));
        ++counts[r];
        xr.push_back(x[r]);
        yr.push_back(y[r]);
    }
    const auto fast = gsa::pawn_interval_ks(ws, counts, 10);
    const auto direct = gsa::pawn_given_data(xr, yr, 10).per_interval_ks;
    REQUIRE(fast.size() == direct.size());
    for (std::size_t j = 0; j < fast.size(); ++j) {
        CHECK(fast[j] == doctest::Approx(direct[j]).epsilon(1e-12));
    }
}
