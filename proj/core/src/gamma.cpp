#include "hyperpi/gamma.hpp"

#include <cmath>

#include "hyperpi/errors.hpp"

namespace hyperpi::special {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// Lanczos g = 7, n = 9 (the widely used double-precision set).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
    if (x < 0.5) {
        // Reflection; sin(pi*x) is safe here since poles were filtered out.
        return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + i);
    const double t = x + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

// Exact Gamma(n/2) for positive integer n via the half-integer recurrence.
double half_integer_gamma(long twice) {
    if (twice % 2 == 0) {
        double v = 1.0;
        for (long k = 2; k < twice / 2; ++k) v *= static_cast<double>(k);
        return v;  // (n-1)!
    }
    double v = kSqrtPi;  // Gamma(1/2)
    for (long k = 1; k < twice; k += 2) v *= 0.5 * static_cast<double>(k);
    return v;
}

} // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
    const double twice = 2.0 * x;
    if (x <= 0.0 && x == std::floor(x)) {
        throw DomainError("gamma_fn: pole at non-positive integer");
    }
    if (twice == std::floor(twice) && twice >= 1.0 && twice <= 171.0) {
        return half_integer_gamma(static_cast<long>(twice));
    }
    return lanczos_gamma(x);
}

double gamma_ratio(double a, double c) {
    return gamma_fn(c) / (gamma_fn(a) * gamma_fn(c - a));
}

} // namespace hyperpi::special
