#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsa/sampling.hpp"

namespace gsa {

/// An evaluatable mapping from an input vector to a scalar output, together
/// with the input distributions and (for segmented models) the indicator
/// variable and its switch threshold.
struct ModelDefinition {
    std::string name;
    std::vector<RandomVariableSpec> input_specs;
    std::function<double(std::span<const double>)> evaluate;
    std::optional<std::size_t> indicator_index;
    std::optional<double> threshold;
};

/// Fuel moisture coefficient 18.35 (2.76 + 0.124 RH - 0.0187 T)^-1.495.
/// Increasing in temperature, decreasing in relative humidity. Throws
/// std::domain_error when the base term is not positive (cannot happen
/// inside the bundled acceptable ranges).
double fuel_moisture_coeff(double temp_c, double rel_humidity_pct);

/// Fuel hazard terms as functions of fuel age (years). The 12 FA factors in
/// the exponents convert years to months, so the decay rates per year are
/// 0.36, 2.64 and 0.30.
struct FuelHazard {
    double surface_score;       // 3.39 (1 - exp(-0.36 FA))
    double near_surface_score;  // 2.50 (1 - exp(-2.64 FA))
    double near_surface_height; // 23.33 (1 - exp(-0.30 FA))
};
FuelHazard fuel_hazard(double fuel_age_years);

/// Dry Eucalypt fire spread rate (m/h), segmented on wind speed at 5 km/hr.
///
/// Below the threshold the rate is 30 phi_Mf. Above it the wind term
/// 1.531 (U-5)^0.858 FHS_s^0.93 (FHS_ns H_ns)^0.637 * 1.03 is added to the 30
/// before multiplying by phi_Mf; the 1.03 factor scales only the wind term,
/// which is the reading that keeps the rate continuous at U = 5.
double dry_eucalypt_rate(double temp_c, double rel_humidity_pct, double wind_speed_kmh,
                         double fuel_age_years);

/// sin(x1) + a sin^2(x2) + b x3^4 sin(x1); the classic benchmark with a known
/// variance decomposition, used to validate the estimators.
double ishigami(double x1, double x2, double x3, double a = 7.0, double b = 0.1);

/// The four bundled fire model inputs (T, RH, U, FA) with the given wind
/// speed mean. Ranges and deviations are the toolkit defaults.
std::vector<RandomVariableSpec> fire_spread_specs(double mean_wind_speed);

/// Fire spread model over fire_spread_specs(mean_wind_speed).
ModelDefinition dry_eucalypt_model(double mean_wind_speed);

/// Benchmark model on [-pi, pi]^3. Inputs are expressed as very wide
/// truncated normals (sd = 100 pi), which is uniform to within 5e-5 of
/// density variation across the range.
ModelDefinition ishigami_model(double a = 7.0, double b = 0.1);

/// Linear combination of near-unit-normal inputs (N(0,1) truncated at +-8
/// sigma); its variance decomposition is exact, so expected indices are
/// analytic.
ModelDefinition linear_model(std::vector<double> coefficients);

/// Evaluates the model on every row of the sample, filling set.outputs.
void evaluate_model(const ModelDefinition& model, SampleSet& set);

}  // namespace gsa
