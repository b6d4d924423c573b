#pragma once

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "hyperpi/errors.hpp"
#include "hyperpi/quadrature.hpp"

namespace hyperpi::roberts {

using Complex = std::complex<double>;

/// Root generators of the reciprocal octic
///   P(x) = x^8 - p x^6 + q x^4 - p x^2 + 1.
/// Eight real roots +-a, +-1/a, +-b, +-1/b.
struct EightReal {
    double a;  // 1 < a
    double b;  // a < b
};
/// Four real roots +-b, +-1/b plus the unit-circle pairs +-e^{+-i alpha}.
struct MixedRoots {
    double alpha;  // sin(alpha) != 0
    double b;      // 1 < b
};
/// All roots on the unit circle: +-e^{+-i alpha}, +-e^{+-i beta}.
struct AllComplex {
    double alpha;
    double beta;
};

using Config = std::variant<EightReal, MixedRoots, AllComplex>;

enum class Interval { ZeroToInvB, InvAToA, BToInf, ZeroToInf };

std::string to_string(Interval iv);

/// Validated model of P(x): generators, the (p, q) coefficients, roots.
class OcticSpec {
public:
    explicit OcticSpec(Config config);

    const Config& config() const { return config_; }
    double p() const { return p_; }
    double q() const { return q_; }

    /// Coefficients of P in ascending powers of x; palindromic.
    std::array<double, 9> coefficients() const;

    /// The 8 roots recovered through the auxiliary quartic
    /// w^2 - (p+4) w + (2p+q+2) = 0 in w = (x + 1/x)^2 and the back-map.
    std::array<Complex, 8> roots() const;

    double evaluate(double x) const;
    Complex evaluate(Complex x) const;

    bool interval_admissible(Interval iv) const;

    /// Generators within 1e-4 of a double-root degeneracy; results are
    /// still produced but carry an inflated error estimate.
    bool near_degenerate() const;

private:
    Config config_;
    double p_ = 0.0;
    double q_ = 0.0;
};

OcticSpec build_octic(const Config& config);

enum class RnRoute { quadrature, elliptic, lauricella };

std::string to_string(RnRoute route);

/// Value of R_n = int x^n / sqrt(P(x)) dx over one admissible interval,
/// with the named sub-values the route is assembled from: each summand
/// of an elliptic closed form, or the prefactor and hypergeometric value
/// of the Lauricella form.
struct ReductionResult {
    double value = 0.0;
    RnRoute route = RnRoute::quadrature;
    std::vector<std::pair<std::string, Complex>> parts;
    double error_estimate = 0.0;
};

/// Recombines parts per route (sum for quadrature/elliptic, product for
/// lauricella); equals value up to roundoff.
Complex recombine_parts(const ReductionResult& r);

/// Direct double-exponential integration of x^n / sqrt(P(x)).
ReductionResult rn_quadrature(const OcticSpec& spec, int n, Interval iv,
                              double tol = quad::kDefaultTol);

/// The matching complete-elliptic closed form (K/E combinations).
ReductionResult rn_elliptic(const OcticSpec& spec, int n, Interval iv);

/// The matching Lauricella/Appell closed form (Gamma prefactor times
/// F_D^(3) or F_D^(4)).
ReductionResult rn_lauricella(const OcticSpec& spec, int n, Interval iv,
                              double tol = 1e-12);

} // namespace hyperpi::roberts
