#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <type_traits>
#include <utility>

#include "hyperpi/errors.hpp"

namespace hyperpi::quad {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-11;

/// Outcome of one integration.
struct Result {
    Complex value{};
    double error_estimate = 0.0;  // >= 0
    std::size_t evaluations = 0;  // >= 1
};

/// Integration domain: a finite segment [a,b] or a ray [a,inf).
/// The singular flags mark endpoints where the integrand may diverge
/// no worse than (distance)^(-1/2).
struct Domain {
    enum class Kind { Finite, SemiInfinite };

    Kind kind = Kind::Finite;
    double a = 0.0;
    double b = 1.0;  // ignored for SemiInfinite
    bool singular_left = false;
    bool singular_right = false;

    static Domain finite(double a, double b, bool singular_left = false,
                         bool singular_right = false) {
        return Domain{Kind::Finite, a, b, singular_left, singular_right};
    }
    static Domain semi_infinite(double a, bool singular_left = false) {
        return Domain{Kind::SemiInfinite, a,
                      std::numeric_limits<double>::infinity(), singular_left,
                      false};
    }
};

namespace detail {

/// Internal node callback: (x, dist_left, dist_right) -> value.
/// The distances are produced directly by the double-exponential transform,
/// so they stay meaningful far below 1 ulp of x itself.
using NodeFn = std::function<Complex(double, double, double)>;

Result integrate_impl(const NodeFn& f, const Domain& domain, double tol);

} // namespace detail

/// Double-exponential quadrature over `domain`.
///
/// `f` is either f(x) or f(x, dist_left, dist_right). Integrands with an
/// inverse-square-root endpoint singularity should use the three-argument
/// form and build the singular factor from the distance argument: node
/// positions cluster double-exponentially and the distance survives where
/// x - endpoint would round to zero.
template <typename F>
Result integrate(F&& f, const Domain& domain, double tol = kDefaultTol) {
    if constexpr (std::is_invocable_v<F&, double, double, double>) {
        detail::NodeFn fn = [&f](double x, double dl, double dr) -> Complex {
            return static_cast<Complex>(f(x, dl, dr));
        };
        return detail::integrate_impl(fn, domain, tol);
    } else {
        static_assert(std::is_invocable_v<F&, double>,
                      "integrand must be callable as f(x) or f(x, dl, dr)");
        detail::NodeFn fn = [&f](double x, double, double) -> Complex {
            return static_cast<Complex>(f(x));
        };
        return detail::integrate_impl(fn, domain, tol);
    }
}

/// One multiplicative factor (1 - x*u)^(-b) of the Euler kernel.
struct KernelFactor {
    Complex x;
    double b;
};

/// Computes the raw Euler-type integral
///   int_0^1 u^(a-1) (1-u)^(c-a-1) prod_i (1 - x_i u)^(-b_i) du
/// for c > a > 0, principal branch for every complex power. The caller
/// supplies the Gamma prefactor.
///
/// Throws BranchCutError when some 1 - x_i*u meets the closed negative real
/// axis on u in (0,1), i.e. x_i is real with x_i >= 1.
Result integrate_complex_kernel(double a, double c,
                                std::span<const KernelFactor> factors,
                                double tol = kDefaultTol);

} // namespace hyperpi::quad
