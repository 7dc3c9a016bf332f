#include "gsa/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsa/normal.hpp"

namespace gsa {

void RandomVariableSpec::validate() const {
    if (!(std_dev > 0.0)) {
        throw std::invalid_argument("variable '" + name + "': std_dev must be positive");
    }
    if (!(lower < upper)) {
        throw std::invalid_argument("variable '" + name + "': lower must be below upper");
    }
    if (!(mean >= lower && mean <= upper)) {
        throw std::invalid_argument("variable '" + name + "': mean outside acceptable range");
    }
}

double truncnorm_pdf(double x, const RandomVariableSpec& spec) {
    if (x < spec.lower || x > spec.upper) return 0.0;
    const double a = (spec.lower - spec.mean) / spec.std_dev;
    const double b = (spec.upper - spec.mean) / spec.std_dev;
    const double mass = normal_cdf(b) - normal_cdf(a);
    const double z = (x - spec.mean) / spec.std_dev;
    return normal_pdf(z) / (mass * spec.std_dev);
}

double truncnorm_cdf(double x, const RandomVariableSpec& spec) {
    if (x <= spec.lower) return 0.0;
    if (x >= spec.upper) return 1.0;
    const double a = (spec.lower - spec.mean) / spec.std_dev;
    const double b = (spec.upper - spec.mean) / spec.std_dev;
    const double fa = normal_cdf(a);
    const double z = (x - spec.mean) / spec.std_dev;
    return (normal_cdf(z) - fa) / (normal_cdf(b) - fa);
}

double truncnorm_inverse_cdf(double p, const RandomVariableSpec& spec) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("truncnorm_inverse_cdf: p must lie strictly inside (0, 1)");
    }
    const double a = (spec.lower - spec.mean) / spec.std_dev;
    const double b = (spec.upper - spec.mean) / spec.std_dev;
    const double fa = normal_cdf(a);
    const double fb = normal_cdf(b);
    const double z = normal_quantile(fa + p * (fb - fa));
    double x = spec.mean + spec.std_dev * z;
    // Rounding can land exactly on a bound; nudge back into the open interval.
    x = std::clamp(x, std::nextafter(spec.lower, spec.upper), std::nextafter(spec.upper, spec.lower));
    return x;
}

}  // namespace gsa
