#include "hyperpi/elliptic.hpp"

#include <cmath>
#include <limits>

#include "hyperpi/errors.hpp"

namespace hyperpi::elliptic {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_modulus(double k, bool allow_one) {
    if (!(k >= 0.0)) throw DomainError("elliptic: modulus must be >= 0");
    if (allow_one ? k > 1.0 : k >= 1.0) {
        throw DomainError("elliptic: modulus out of range");
    }
}

// Carlson symmetric forms, duplication theorem. Arguments nonnegative,
// at most one of x,y zero for rf; z > 0 for rd.
double rf(double x, double y, double z) {
    double dx, dy, dz;
    do {
        const double lam =
            std::sqrt(x) * std::sqrt(y) + std::sqrt(y) * std::sqrt(z) +
            std::sqrt(z) * std::sqrt(x);
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        const double mu = (x + y + z) / 3.0;
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > 1e-8);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    const double s = 1.0 - e2 / 10.0 + e2 * e2 / 24.0 + e3 / 14.0 -
                     (3.0 / 44.0) * e2 * e3;
    return s / std::sqrt((x + y + z) / 3.0);
}

double rd(double x, double y, double z) {
    double sum = 0.0;
    double fac = 1.0;
    double dx, dy, dz;
    do {
        const double lam =
            std::sqrt(x) * std::sqrt(y) + std::sqrt(y) * std::sqrt(z) +
            std::sqrt(z) * std::sqrt(x);
        sum += fac / (std::sqrt(z) * (z + lam));
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        const double mu = (x + y + 3.0 * z) / 5.0;
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > 1e-8);
    const double ea = dx * dy;
    const double eb = dz * dz;
    const double ec = ea - eb;
    const double ed = ea - 6.0 * eb;
    const double ee = ed + 2.0 * ec;
    const double mu = (x + y + 3.0 * z) / 5.0;
    const double s =
        1.0 + ed * (-3.0 / 14.0 + (9.0 / 88.0) * ed - (4.5 / 26.0) * dz * ee) +
        dz * ((1.0 / 6.0) * ee + dz * (-(9.0 / 22.0) * ec + (3.0 / 26.0) * dz * ea));
    return 3.0 * sum + fac * s / (mu * std::sqrt(mu));
}

} // namespace

double K(double k) {
    check_modulus(k, /*allow_one=*/false);
    double a = 1.0;
    double g = std::sqrt((1.0 - k) * (1.0 + k));  // k' without cancellation
    while (std::abs(a - g) > 4.0 * kEps * a) {
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
    }
    return kPi / (2.0 * a);
}

double E(double k) {
    check_modulus(k, /*allow_one=*/true);
    if (k == 1.0) return 1.0;
    double a = 1.0;
    double g = std::sqrt((1.0 - k) * (1.0 + k));
    double c = k;
    double sum = 0.5 * c * c;  // 2^(n-1) c_n^2 starting at n = 0
    double pow2 = 1.0;
    while (std::abs(a - g) > 4.0 * kEps * a) {
        c = 0.5 * (a - g);
        const double an = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = an;
        sum += pow2 * c * c;
        pow2 *= 2.0;
    }
    return kPi / (2.0 * a) * (1.0 - sum);
}

double F(double phi, double k) {
    if (!(phi >= 0.0 && phi <= kPi / 2.0 + 1e-15)) {
        throw DomainError("elliptic::F: amplitude out of [0, pi/2]");
    }
    if (!(k >= 0.0)) throw DomainError("elliptic::F: modulus must be >= 0");
    if (phi == 0.0) return 0.0;
    const double s = std::sin(phi);
    if (!(k * s < 1.0)) throw DomainError("elliptic::F: k*sin(phi) >= 1");
    if (phi >= kPi / 2.0 - 1e-15) return K(k);
    const double c = std::cos(phi);
    const double q = (1.0 - k * s) * (1.0 + k * s);
    return s * rf(c * c, q, 1.0);
}

double E_inc(double phi, double k) {
    if (!(phi >= 0.0 && phi <= kPi / 2.0 + 1e-15)) {
        throw DomainError("elliptic::E_inc: amplitude out of [0, pi/2]");
    }
    if (!(k >= 0.0)) throw DomainError("elliptic::E_inc: modulus must be >= 0");
    if (phi == 0.0) return 0.0;
    const double s = std::sin(phi);
    if (!(k * s < 1.0)) throw DomainError("elliptic::E_inc: k*sin(phi) >= 1");
    if (phi >= kPi / 2.0 - 1e-15) return E(k);
    const double c = std::cos(phi);
    const double q = (1.0 - k * s) * (1.0 + k * s);
    return s * rf(c * c, q, 1.0) -
           (k * k * s * s * s / 3.0) * rd(c * c, q, 1.0);
}

} // namespace hyperpi::elliptic
