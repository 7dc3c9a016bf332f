#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsa/errors.hpp"
#include "gsa/kde.hpp"
#include "gsa/models.hpp"
#include "gsa/moment_independent.hpp"
#include "gsa/normal.hpp"
#include "gsa/rng.hpp"

namespace {

std::vector<double> uniform_draws(std::size_t n, std::uint64_t seed) {
    gsa::Rng rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = rng.uniform01();
    return out;
}

std::vector<double> normal_draws(std::size_t n, std::uint64_t seed) {
    gsa::Rng rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = gsa::normal_quantile(rng.uniform01());
    return out;
}

// Correlated pair (z1, rho z1 + sqrt(1-rho^2) z2).
std::pair<std::vector<double>, std::vector<double>> gaussian_pair(std::size_t n, double rho,
                                                                  std::uint64_t seed) {
    gsa::Rng rng(seed);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z1 = gsa::normal_quantile(rng.uniform01());
        const double z2 = gsa::normal_quantile(rng.uniform01());
        x[i] = z1;
        y[i] = rho * z1 + std::sqrt(1.0 - rho * rho) * z2;
    }
    return {x, y};
}

}  // namespace

TEST_CASE("entropy of the unit uniform is zero") {
    CHECK(std::abs(gsa::differential_entropy(uniform_draws(1000000, 1))) < 0.01);
}

TEST_CASE("entropy of the standard normal") {
    const double expected = 0.5 * std::log(2.0 * std::acos(-1.0) * std::exp(1.0));  // 1.41894
    CHECK(gsa::differential_entropy(normal_draws(1000000, 2)) ==
          doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("entropy shift and scale behavior") {
    const std::vector<double> base = normal_draws(20000, 3);
    std::vector<double> shifted = base;
    for (auto& v : shifted) v += 123.0;
    CHECK(std::abs(gsa::differential_entropy(base) - gsa::differential_entropy(shifted)) < 1e-6);

    std::vector<double> scaled = base;
    for (auto& v : scaled) v *= 5.0;
    CHECK(gsa::differential_entropy(scaled) - gsa::differential_entropy(base) ==
          doctest::Approx(std::log(5.0)).epsilon(0.01));
}

TEST_CASE("entropy rejects degenerate and tiny samples") {
    CHECK_THROWS_AS(gsa::differential_entropy(std::vector<double>(100, 7.0)),
                    gsa::degenerate_data_error);
    CHECK_THROWS_AS(gsa::differential_entropy(std::vector{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("entropy tolerates duplicates through jitter") {
    std::vector<double> data = normal_draws(5000, 4);
    for (std::size_t i = 0; i < data.size(); i += 2) data[i] = data[0];  // heavy ties
    CHECK(std::isfinite(gsa::differential_entropy(data)));
}

TEST_CASE("mutual information of independent variables is near zero") {
    const auto x = uniform_draws(100000, 5);
    const auto y = uniform_draws(100000, 6);
    CHECK(std::abs(gsa::knn_mutual_information(x, y)) < 0.01);
}

TEST_CASE("mutual information of a correlated gaussian pair") {
    const double expected = -0.5 * std::log(1.0 - 0.25);  // 0.143841
    const auto [x, y] = gaussian_pair(100000, 0.5, 7);
    CHECK(std::abs(gsa::knn_mutual_information(x, y) - expected) < 0.01);
}

TEST_CASE("mutual information is symmetric up to estimator noise") {
    const auto [x, y] = gaussian_pair(20000, 0.5, 8);
    CHECK(std::abs(gsa::knn_mutual_information(x, y) - gsa::knn_mutual_information(y, x)) < 0.01);
}

TEST_CASE("mutual information is invariant under affine rescaling of x") {
    const auto [x, y] = gaussian_pair(100000, 0.5, 9);
    std::vector<double> rescaled = x;
    for (auto& v : rescaled) v = 2.0 * v + 1.0;
    const double base = gsa::knn_mutual_information(x, y);
    const double moved = gsa::knn_mutual_information(rescaled, y);
    CHECK(std::abs(base - moved) < 1e-6);
}

TEST_CASE("mutual information input validation") {
    CHECK_THROWS_AS(gsa::knn_mutual_information(std::vector{1.0, 2.0, 3.0},
                                                std::vector{1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gsa::knn_mutual_information(std::vector<double>(100, 1.0),
                                                uniform_draws(100, 10)),
                    gsa::degenerate_data_error);
}

TEST_CASE("normalized mutual information") {
    CHECK(gsa::normalize_mi(0.0).value == 0.0);
    CHECK_FALSE(gsa::normalize_mi(0.0).clamped_negative);
    CHECK(gsa::normalize_mi(5.0).value < 1.0);   // exact limit is 1, reached only as eta -> inf
    CHECK(gsa::normalize_mi(5.0).value > 0.9999);
    CHECK(gsa::normalize_mi(50.0).value <= 1.0);  // saturates in floating point
    // Inverse of the closed-form gaussian relation: eta = 0.1438 -> rho = 0.5.
    CHECK(gsa::normalize_mi(0.143841).value == doctest::Approx(0.5).epsilon(1e-5));

    const auto clamped = gsa::normalize_mi(-0.02);
    CHECK(clamped.value == 0.0);
    CHECK(clamped.clamped_negative);

    double previous = -1.0;
    for (double eta = 0.0; eta < 3.0; eta += 0.1) {
        const double rho = gsa::normalize_mi(eta).value;
        CHECK(rho > previous);
        previous = rho;
    }
}

TEST_CASE("delta of an independent pair stays small") {
    const auto x = uniform_draws(10000, 11);
    const auto y = normal_draws(10000, 12);
    const double delta = gsa::delta_given_data(x, y);
    CHECK(delta < 0.05);
    CHECK(delta >= 0.0);
}

TEST_CASE("delta of a fully determining input approaches one") {
    const auto x = uniform_draws(5000, 13);
    CHECK(gsa::delta_given_data(x, x, 50) > 0.9);
}

TEST_CASE("delta stays within [0, 1] plus integration slack") {
    for (std::uint64_t seed = 20; seed < 24; ++seed) {
        const auto x = uniform_draws(2000, seed);
        std::vector<double> y(x.size());
        gsa::Rng rng(seed + 100);
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] = std::sin(6.0 * x[i]) + 0.3 * gsa::normal_quantile(rng.uniform01());
        }
        const double delta = gsa::delta_given_data(x, y, 10);
        CHECK(delta >= 0.0);
        CHECK(delta <= 1.02);
    }
}

TEST_CASE("delta input validation") {
    const auto x = uniform_draws(1000, 30);
    const auto y = uniform_draws(1000, 31);
    CHECK_THROWS_AS(gsa::delta_given_data(x, y, 1), std::invalid_argument);
    CHECK_THROWS_AS(gsa::delta_given_data(x, y, 40), std::invalid_argument);  // < 50 per class
    CHECK_THROWS_AS(gsa::delta_given_data(uniform_draws(500, 32), y, 5), std::invalid_argument);
}

TEST_CASE("adaptive partition count follows the reference rule") {
    CHECK(gsa::delta_auto_partitions(5000) == 18);
    CHECK(gsa::delta_auto_partitions(500) == 5);
    CHECK(gsa::delta_auto_partitions(100000) <= 48);
}

TEST_CASE("joint null: delta and mutual information on independent pairs") {
    const auto x = uniform_draws(10000, 40);
    const auto y = normal_draws(10000, 41);
    CHECK(gsa::delta_given_data(x, y) <= 0.05);
    CHECK(std::abs(gsa::knn_mutual_information(x, y)) <= 0.05);
}

TEST_CASE("entropy of the fire model output at the reference operating point") {
    // Converged k-NN estimate of the segmented model's output entropy.
    gsa::ModelDefinition model = gsa::dry_eucalypt_model(4.7);
    gsa::SampleSet set = gsa::lhs_sample(model.input_specs, 500000, 77);
    gsa::evaluate_model(model, set);
    CHECK(gsa::differential_entropy(set.outputs) == doctest::Approx(3.6475).epsilon(0.05 / 3.6));
}

TEST_CASE("kde density integrates to about one") {
    const auto data = normal_draws(5000, 50);
    const double h = gsa::silverman_bandwidth(data);
    gsa::UniformGrid grid;
    grid.count = 800;
    grid.start = -5.0 - 3.0 * h;
    grid.step = (10.0 + 6.0 * h) / 799.0;
    const gsa::DensityEstimate density = gsa::gaussian_kde(data, grid);
    for (double d : density.density) CHECK(d >= 0.0);
    const double integral = gsa::trapezoid_integral(density.density, grid.step);
    CHECK(integral > 0.98);
    CHECK(integral < 1.02);
}

TEST_CASE("bandwidth rules") {
    const auto data = normal_draws(10000, 51);
    const double robust = gsa::silverman_bandwidth(data);
    const double reference = gsa::normal_reference_bandwidth(data);
    CHECK(robust > 0.0);
    CHECK(reference > robust);  // 1.06 sd beats 0.9 min(sd, iqr/1.34) on normals
    CHECK_THROWS_AS(gsa::normal_reference_bandwidth(std::vector{1.0}), std::invalid_argument);
}
