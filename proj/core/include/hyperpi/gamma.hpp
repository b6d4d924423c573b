#pragma once

namespace hyperpi::special {

/// Gamma function for real non-pole arguments, Lanczos approximation
/// (g = 7, 9 terms) with reflection for x < 0.5. Integer and half-integer
/// arguments up to 171/2 are served from an exact recurrence instead.
double gamma_fn(double x);

/// Gamma(c) / (Gamma(a) * Gamma(c-a)), the Euler-integral prefactor.
double gamma_ratio(double a, double c);

} // namespace hyperpi::special
