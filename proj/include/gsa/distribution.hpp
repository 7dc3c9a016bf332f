#pragma once

#include <string>

namespace gsa {

/// One input variable: a normal law restricted to an acceptable range.
struct RandomVariableSpec {
    std::string name;
    double mean = 0.0;
    double std_dev = 1.0;
    double lower = -1.0;
    double upper = 1.0;

    /// Throws std::invalid_argument unless lower < upper, std_dev > 0 and
    /// mean lies inside [lower, upper].
    void validate() const;

    bool operator==(const RandomVariableSpec&) const = default;
};

/// Density of the truncated normal law described by spec (zero outside the range).
double truncnorm_pdf(double x, const RandomVariableSpec& spec);

/// CDF of the truncated normal law; clamps to 0/1 outside the range.
double truncnorm_cdf(double x, const RandomVariableSpec& spec);

/// Quantile of the truncated normal law.
///
/// The truncation is realized through the inverse CDF rather than literal
/// resampling: x = mean + sd * Phi^-1(Phi(a) + p (Phi(b) - Phi(a))), which is
/// equal in distribution to accept-reject draws and keeps stratified designs
/// intact. Strictly increasing in p; the result lies strictly inside
/// (lower, upper). Throws std::domain_error unless 0 < p < 1.
double truncnorm_inverse_cdf(double p, const RandomVariableSpec& spec);

}  // namespace gsa
