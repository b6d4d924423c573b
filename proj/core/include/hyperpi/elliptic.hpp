#pragma once

namespace hyperpi::elliptic {

/// Complete elliptic integral of the first kind, modulus convention:
///   K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),  0 <= k < 1.
/// AGM iteration, accurate to a few ulp.
double K(double k);

/// Complete elliptic integral of the second kind, 0 <= k <= 1 (E(1) = 1).
double E(double k);

/// Incomplete first kind F(phi, k), phi in [0, pi/2], k*sin(phi) < 1.
/// F(pi/2, k) delegates to K(k).
double F(double phi, double k);

/// Incomplete second kind E(phi, k); E_inc(pi/2, k) delegates to E(k).
double E_inc(double phi, double k);

} // namespace hyperpi::elliptic
