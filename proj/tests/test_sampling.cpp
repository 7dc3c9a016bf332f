#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "gsa/models.hpp"
#include "gsa/sampling.hpp"
#include "gsa/stats.hpp"
#include "oracles.hpp"

using gsa::LhsPlacement;
using gsa::RandomVariableSpec;
using gsa::SampleSet;

namespace {
const RandomVariableSpec kSymmetric{"x", 4.0, 0.8, 1.5, 6.5};
const RandomVariableSpec kTemperature{"T", 25.0, 4.0, 10.0, 40.0};
// Wide sd makes the truncated law near-uniform over the range.
const RandomVariableSpec kUniformLike{"u", 0.0, 1000.0, 0.0, 1.0};
}  // namespace

TEST_CASE("quantile of a symmetric spec: median equals the mean") {
    CHECK(gsa::truncnorm_inverse_cdf(0.5, kSymmetric) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("quantile approaches the bounds at extreme probabilities") {
    const double near_lower = gsa::truncnorm_inverse_cdf(1e-13, kSymmetric);
    CHECK(near_lower > kSymmetric.lower);
    CHECK(near_lower < kSymmetric.lower + 1e-3);
    const double near_upper = gsa::truncnorm_inverse_cdf(1.0 - 1e-13, kSymmetric);
    CHECK(near_upper < kSymmetric.upper);
    CHECK(near_upper > kSymmetric.upper - 1e-3);
}

TEST_CASE("quantile rejects probabilities outside (0, 1)") {
    CHECK_THROWS_AS(gsa::truncnorm_inverse_cdf(0.0, kSymmetric), std::domain_error);
    CHECK_THROWS_AS(gsa::truncnorm_inverse_cdf(1.0, kSymmetric), std::domain_error);
    CHECK_THROWS_AS(gsa::truncnorm_inverse_cdf(-0.2, kSymmetric), std::domain_error);
    CHECK_THROWS_AS(gsa::truncnorm_inverse_cdf(1.7, kSymmetric), std::domain_error);
}

TEST_CASE("quantile matches the quadrature oracle") {
    // Expected value from the independent quadrature oracle; 22.3026 frozen.
    const double expected = oracles::quadrature_truncnorm_quantile(0.25, kTemperature);
    CHECK(expected == doctest::Approx(22.3026).epsilon(1e-4));
    CHECK(gsa::truncnorm_inverse_cdf(0.25, kTemperature) ==
          doctest::Approx(expected).epsilon(1e-7));
    CHECK(gsa::truncnorm_inverse_cdf(0.9, kTemperature) ==
          doctest::Approx(oracles::quadrature_truncnorm_quantile(0.9, kTemperature)).epsilon(1e-7));

    const RandomVariableSpec asymmetric{"a", 1.0, 2.0, 0.5, 9.0};
    for (const double p : {0.05, 0.3, 0.62, 0.99}) {
        CHECK(gsa::truncnorm_inverse_cdf(p, asymmetric) ==
              doctest::Approx(oracles::quadrature_truncnorm_quantile(p, asymmetric)).epsilon(1e-6));
    }
}

TEST_CASE("quantile is strictly increasing in p") {
    double previous = gsa::truncnorm_inverse_cdf(1e-6, kTemperature);
    for (double p = 0.02; p < 1.0; p += 0.02) {
        const double current = gsa::truncnorm_inverse_cdf(p, kTemperature);
        CHECK(current > previous);
        previous = current;
    }
}

TEST_CASE("quantile inverts the CDF") {
    for (const double p : {0.001, 0.2, 0.5, 0.77, 0.999}) {
        const double x = gsa::truncnorm_inverse_cdf(p, kTemperature);
        CHECK(gsa::truncnorm_cdf(x, kTemperature) == doctest::Approx(p).epsilon(1e-9));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS((RandomVariableSpec{"bad", 0.0, -1.0, 0.0, 1.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((RandomVariableSpec{"bad", 0.5, 1.0, 2.0, 1.0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS((RandomVariableSpec{"bad", 5.0, 1.0, 0.0, 1.0}).validate(),
                    std::invalid_argument);
    CHECK_NOTHROW(kTemperature.validate());
}

TEST_CASE("lhs: one point per quartile stratum for a uniform-like spec") {
    const SampleSet set = gsa::lhs_sample(std::vector{kUniformLike}, 4, 99);
    std::set<int> strata;
    for (std::size_t r = 0; r < 4; ++r) {
        const double p = gsa::truncnorm_cdf(set.input(r, 0), kUniformLike);
        strata.insert(static_cast<int>(p * 4.0));
    }
    CHECK(strata == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("lhs: stratification is exact for every dimension") {
    const auto specs = gsa::fire_spread_specs(4.7);
    const std::size_t n = 500;
    const SampleSet set = gsa::lhs_sample(specs, n, 1234);
    for (std::size_t d = 0; d < specs.size(); ++d) {
        std::set<std::size_t> strata;
        for (std::size_t r = 0; r < n; ++r) {
            const double p = gsa::truncnorm_cdf(set.input(r, d), specs[d]);
            strata.insert(static_cast<std::size_t>(p * static_cast<double>(n)));
        }
        CHECK(strata.size() == n);
    }
}

TEST_CASE("lhs: identical seeds give bit-identical matrices") {
    const auto specs = gsa::fire_spread_specs(3.2);
    const SampleSet a = gsa::lhs_sample(specs, 257, 77);
    const SampleSet b = gsa::lhs_sample(specs, 257, 77);
    CHECK(a.inputs == b.inputs);
    const SampleSet c = gsa::lhs_sample(specs, 257, 78);
    CHECK(a.inputs != c.inputs);
}

TEST_CASE("lhs: every coordinate respects its acceptable range") {
    const RandomVariableSpec tight{"t", 0.9, 5.0, 0.85, 1.0};
    const std::vector<RandomVariableSpec> specs{tight, kTemperature, kUniformLike};
    for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const SampleSet set = gsa::lhs_sample(specs, 401, seed);
        for (std::size_t r = 0; r < set.rows(); ++r) {
            for (std::size_t d = 0; d < specs.size(); ++d) {
                CHECK(set.input(r, d) > specs[d].lower);
                CHECK(set.input(r, d) < specs[d].upper);
            }
        }
    }
}

TEST_CASE("lhs: sample means match the quadrature oracle within 3 standard errors") {
    const auto specs = gsa::fire_spread_specs(4.7);
    const std::size_t n = 10000;
    const SampleSet set = gsa::lhs_sample(specs, n, 2024);
    for (std::size_t d = 0; d < specs.size(); ++d) {
        const std::vector<double> col = gsa::column(set, d);
        const double expected = oracles::quadrature_truncnorm_mean(specs[d]);
        const double se = oracles::quadrature_truncnorm_sd(specs[d]) / std::sqrt(static_cast<double>(n));
        CHECK(std::abs(gsa::mean(col) - expected) < 3.0 * se);
    }
}

TEST_CASE("lhs: rejects fewer than two samples") {
    CHECK_THROWS_AS(gsa::lhs_sample(std::vector{kSymmetric}, 1, 5), std::invalid_argument);
}

TEST_CASE("lhs: midpoint placement hits stratum centers") {
    const std::size_t n = 5;
    const SampleSet set =
        gsa::lhs_sample(std::vector{kTemperature}, n, 31, LhsPlacement::midpoint);
    std::set<int> centers;
    for (std::size_t r = 0; r < n; ++r) {
        const double p = gsa::truncnorm_cdf(set.input(r, 0), kTemperature);
        const double scaled = p * static_cast<double>(n) - 0.5;
        CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-7));
        centers.insert(static_cast<int>(std::round(scaled)));
    }
    CHECK(centers.size() == n);
}

TEST_CASE("sobol matrices: hybrid i differs from B only in column i") {
    const auto specs = gsa::fire_spread_specs(4.7);
    const std::size_t n = 64;
    const gsa::SobolDesign design = gsa::sobol_matrices(specs, n, 55);
    REQUIRE(design.hybrids.size() == specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t d = 0; d < specs.size(); ++d) {
                const double expected =
                    d == i ? design.base.input(r, d) : design.paired.input(r, d);
                CHECK(design.hybrids[i].input(r, d) == expected);
            }
        }
    }
}

TEST_CASE("sobol matrices: single-variable hybrid equals the base matrix") {
    const gsa::SobolDesign design = gsa::sobol_matrices(std::vector{kSymmetric}, 32, 9);
    CHECK(design.hybrids.size() == 1);
    CHECK(design.hybrids[0].inputs == design.base.inputs);
}

TEST_CASE("sobol matrices: design size is (n + 2) N rows") {
    const auto specs = gsa::fire_spread_specs(4.7);
    const gsa::SobolDesign design = gsa::sobol_matrices(specs, 4000, 7);
    std::size_t rows = design.base.rows() + design.paired.rows();
    for (const auto& hybrid : design.hybrids) rows += hybrid.rows();
    CHECK(rows == (specs.size() + 2) * 4000);
    CHECK(design.base.inputs != design.paired.inputs);
}

TEST_CASE("sobol matrices: deterministic given the seed") {
    const auto specs = gsa::fire_spread_specs(6.0);
    const gsa::SobolDesign a = gsa::sobol_matrices(specs, 128, 1010);
    const gsa::SobolDesign b = gsa::sobol_matrices(specs, 128, 1010);
    CHECK(a.base.inputs == b.base.inputs);
    CHECK(a.paired.inputs == b.paired.inputs);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CHECK(a.hybrids[i].inputs == b.hybrids[i].inputs);
    }
}
