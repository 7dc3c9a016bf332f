#include "gsa/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsa {

double fuel_moisture_coeff(double temp_c, double rel_humidity_pct) {
    const double base = 2.76 + 0.124 * rel_humidity_pct - 0.0187 * temp_c;
    if (!(base > 0.0)) {
        throw std::domain_error("fuel_moisture_coeff: non-positive base term");
    }
    return 18.35 * std::pow(base, -1.495);
}

FuelHazard fuel_hazard(double fuel_age_years) {
    return {
        3.39 * (1.0 - std::exp(-0.03 * 12.0 * fuel_age_years)),
        2.5 * (1.0 - std::exp(-0.22 * 12.0 * fuel_age_years)),
        23.33 * (1.0 - std::exp(-0.025 * 12.0 * fuel_age_years)),
    };
}

double dry_eucalypt_rate(double temp_c, double rel_humidity_pct, double wind_speed_kmh,
                         double fuel_age_years) {
    const double moisture = fuel_moisture_coeff(temp_c, rel_humidity_pct);
    if (wind_speed_kmh <= 5.0) {
        return 30.0 * moisture;
    }
    const FuelHazard hazard = fuel_hazard(fuel_age_years);
    const double wind_term = 1.531 * std::pow(wind_speed_kmh - 5.0, 0.858) *
                             std::pow(hazard.surface_score, 0.93) *
                             std::pow(hazard.near_surface_score * hazard.near_surface_height, 0.637) *
                             1.03;
    return (30.0 + wind_term) * moisture;
}

double ishigami(double x1, double x2, double x3, double a, double b) {
    const double s2 = std::sin(x2);
    return std::sin(x1) + a * s2 * s2 + b * x3 * x3 * x3 * x3 * std::sin(x1);
}

std::vector<RandomVariableSpec> fire_spread_specs(double mean_wind_speed) {
    return {
        {"T", 25.0, 4.0, 10.0, 40.0},
        {"RH", 20.0, 2.0, 14.0, 26.0},
        {"U", mean_wind_speed, 0.5, 0.5, 9.5},
        {"FA", 4.0, 0.8, 1.5, 6.5},
    };
}

ModelDefinition dry_eucalypt_model(double mean_wind_speed) {
    ModelDefinition model;
    model.name = "dry_eucalypt";
    model.input_specs = fire_spread_specs(mean_wind_speed);
    model.evaluate = [](std::span<const double> x) {
        return dry_eucalypt_rate(x[0], x[1], x[2], x[3]);
    };
    model.indicator_index = 2;
    model.threshold = 5.0;
    return model;
}

ModelDefinition ishigami_model(double a, double b) {
    constexpr double pi = std::numbers::pi;
    ModelDefinition model;
    model.name = "ishigami";
    for (const char* name : {"x1", "x2", "x3"}) {
        model.input_specs.push_back({name, 0.0, 100.0 * pi, -pi, pi});
    }
    model.evaluate = [a, b](std::span<const double> x) {
        return ishigami(x[0], x[1], x[2], a, b);
    };
    return model;
}

ModelDefinition linear_model(std::vector<double> coefficients) {
    ModelDefinition model;
    model.name = "linear";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        model.input_specs.push_back({"x" + std::to_string(i + 1), 0.0, 1.0, -8.0, 8.0});
    }
    model.evaluate = [c = std::move(coefficients)](std::span<const double> x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * x[i];
        return acc;
    };
    return model;
}

void evaluate_model(const ModelDefinition& model, SampleSet& set) {
    const std::size_t n = set.rows();
    set.outputs.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        set.outputs[r] = model.evaluate(set.row(r));
    }
}

}  // namespace gsa
