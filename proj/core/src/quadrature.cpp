#include "hyperpi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hyperpi::quad {
namespace {

constexpr double kPiHalf = 1.5707963267948966;
constexpr double kTMax = 6.0;
constexpr int kMaxLevel = 12;

struct Node {
    double x;
    double dl;  // distance to the left endpoint
    double dr;  // distance to the right endpoint
    double w;
    bool usable;
};

// tanh-sinh abscissa for t in R, mapped onto [a,b]. Distances to the
// endpoints are computed through 2/(1+exp(+-2z)), never by subtraction.
Node finite_node(double t, double a, double b) {
    const double half = 0.5 * (b - a);
    const double z = kPiHalf * std::sinh(t);
    const double ch = std::cosh(z);
    const double w = half * kPiHalf * std::cosh(t) / (ch * ch);
    const double dr = (b - a) / (1.0 + std::exp(2.0 * z));
    const double dl = (b - a) / (1.0 + std::exp(-2.0 * z));
    const double x = t <= 0.0 ? a + dl : b - dr;
    const bool usable = w > 0.0 && dl > 0.0 && dr > 0.0 && std::isfinite(w);
    return Node{x, dl, dr, w, usable};
}

// exp-sinh abscissa for [a,inf): x = a + exp(z). The left distance exp(z)
// is exact in the transformed variable.
Node semi_node(double t, double a) {
    const double z = kPiHalf * std::sinh(t);
    const double e = std::exp(z);
    const double w = kPiHalf * std::cosh(t) * e;
    const double x = a + e;
    const bool usable = e > 0.0 && std::isfinite(w) && std::isfinite(x);
    return Node{x, e, std::numeric_limits<double>::infinity(), w, usable};
}

double cabs(const Complex& v) { return std::abs(v); }

} // namespace

namespace detail {

Result integrate_impl(const NodeFn& f, const Domain& domain, double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-3)) {
        throw DomainError("integrate: tol must lie in [1e-14, 1e-3]");
    }
    if (domain.kind == Domain::Kind::Finite) {
        if (!(domain.a < domain.b) || !std::isfinite(domain.a) ||
            !std::isfinite(domain.b)) {
            throw DomainError("integrate: finite domain requires a < b");
        }
    } else if (!std::isfinite(domain.a)) {
        throw DomainError("integrate: semi-infinite domain requires finite a");
    }

    const bool finite = domain.kind == Domain::Kind::Finite;
    auto make_node = [&](double t) {
        return finite ? finite_node(t, domain.a, domain.b)
                      : semi_node(t, domain.a);
    };

    std::size_t evals = 0;
    auto eval = [&](const Node& n) -> Complex {
        ++evals;
        const Complex v = f(n.x, n.dl, n.dr);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            // A non-finite sample under a vanishing weight contributes
            // nothing; anywhere else the integrand is outside the
            // supported class.
            if (n.w < 1e-280) return Complex(0.0, 0.0);
            throw DomainError("integrate: integrand not finite inside domain");
        }
        return v * n.w;
    };

    double h = 1.0;
    Complex total(0.0, 0.0);
    double scale = 0.0;  // running max |term|/h, used for the break test

    // Level 0: t = 0, +-h, +-2h, ...
    {
        const Node n0 = make_node(0.0);
        if (n0.usable) {
            const Complex v = eval(n0);
            total += v;
            scale = std::max(scale, cabs(v));
        }
        for (int side = -1; side <= 1; side += 2) {
            int quiet = 0;
            for (int k = 1; k * h <= kTMax; ++k) {
                const Node n = make_node(side * k * h);
                if (!n.usable) break;
                const Complex v = eval(n);
                total += v;
                scale = std::max(scale, cabs(v));
                if (cabs(v) < 1e-18 * (scale + 1e-300) && k * h >= 2.0) {
                    if (++quiet >= 3) break;
                } else {
                    quiet = 0;
                }
            }
        }
    }

    Complex estimate = total * h;
    double err = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        Complex sum_new(0.0, 0.0);
        for (int side = -1; side <= 1; side += 2) {
            int quiet = 0;
            for (int j = 0;; ++j) {
                const double t = side * (2 * j + 1) * h;
                if (std::abs(t) > kTMax) break;
                const Node n = make_node(t);
                if (!n.usable) break;
                const Complex v = eval(n);
                sum_new += v;
                scale = std::max(scale, cabs(v));
                if (cabs(v) < 1e-18 * (scale + 1e-300) && std::abs(t) >= 2.0) {
                    if (++quiet >= 3) break;
                } else {
                    quiet = 0;
                }
            }
        }
        total += sum_new;
        const Complex next = total * h;
        err = cabs(next - estimate);
        estimate = next;
        if (level >= 2 && err <= tol * (1.0 + cabs(estimate))) {
            return Result{estimate, err, std::max<std::size_t>(evals, 1)};
        }
    }
    if (err > tol * (1.0 + cabs(estimate))) {
        throw NonConvergence(
            "integrate: refinement stalled above tolerance (err=" +
            std::to_string(err) + ")");
    }
    return Result{estimate, err, std::max<std::size_t>(evals, 1)};
}

} // namespace detail

Result integrate_complex_kernel(double a, double c,
                                std::span<const KernelFactor> factors,
                                double tol) {
    if (!(a > 0.0) || !(c > a)) {
        throw DomainError("integrate_complex_kernel: requires c > a > 0");
    }
    for (const auto& fac : factors) {
        // 1 - x*u meets the closed negative real axis on (0,1) exactly when
        // x is real with x >= 1.
        if (std::abs(fac.x.imag()) <= 1e-14 * (1.0 + std::abs(fac.x.real())) &&
            fac.x.real() >= 1.0 - 1e-14) {
            throw BranchCutError(
                "integrate_complex_kernel: argument on the excluded set "
                "[1,inf)");
        }
        // Sample the path of 1 - x*u on a coarse grid as well.
        for (int k = 1; k < 64; ++k) {
            const Complex z = 1.0 - fac.x * (k / 64.0);
            if (std::abs(z.imag()) < 1e-14 && z.real() <= 0.0) {
                throw BranchCutError(
                    "integrate_complex_kernel: 1 - x*u crosses the branch "
                    "cut");
            }
        }
    }

    const double pl = a - 1.0;      // exponent of u at the left endpoint
    const double pr = c - a - 1.0;  // exponent of (1-u) at the right endpoint
    auto integrand = [&](double /*u*/, double dl, double dr) -> Complex {
        double w = 1.0;
        if (pl != 0.0) w *= std::pow(dl, pl);
        if (pr != 0.0) w *= std::pow(dr, pr);
        Complex prod(w, 0.0);
        for (const auto& fac : factors) {
            // (1-x) + x*dr == 1 - x*u, stable against cancellation near u=1.
            const Complex base = (1.0 - fac.x) + fac.x * dr;
            prod *= std::pow(base, -fac.b);
        }
        return prod;
    };
    return integrate(integrand, Domain::finite(0.0, 1.0, pl < 0.0, pr < 0.0),
                     tol);
}

} // namespace hyperpi::quad
