#include "hyperpi/lauricella.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpi/gamma.hpp"
#include "hyperpi/quadrature.hpp"

namespace hyperpi::hyp {
namespace {

constexpr std::size_t kShellCap = 10000;
constexpr double kSeriesRadius = 0.95;

} // namespace

LauricellaCall::LauricellaCall(double a_, std::vector<double> b_, double c_,
                               std::vector<Complex> x_)
    : a(a_), b(std::move(b_)), c(c_), x(std::move(x_)) {
    if (b.size() != x.size()) {
        throw DomainError("LauricellaCall: len(b) != len(x)");
    }
    if (b.size() < 2 || b.size() > 4) {
        throw DomainError("LauricellaCall: n must be 2, 3 or 4");
    }
}

double LauricellaCall::max_abs_x() const {
    double m = 0.0;
    for (const auto& xi : x) m = std::max(m, std::abs(xi));
    return m;
}

namespace detail {

HyperValue fd_series_capped(const LauricellaCall& call, double tol,
                            std::size_t max_shells) {
    if (call.max_abs_x() > kSeriesRadius) {
        throw DomainError("fd_series: requires max|x_i| <= 0.95");
    }
    const std::size_t n = call.n();

    // B[i][m] = (b_i)_m x_i^m / m!; layer[k] is the degree-indexed
    // convolution of B[0..k], so layer[n-1][d] is the full shell
    // coefficient and the shell value is (a)_d/(c)_d * layer[n-1][d].
    std::vector<std::vector<Complex>> B(n), layer(n);
    std::vector<double> A;  // (a)_d / (c)_d

    Complex sum(0.0, 0.0);
    double last_shells[3] = {0.0, 0.0, 0.0};
    int below = 0;

    for (std::size_t d = 0; d < max_shells; ++d) {
        if (d == 0) {
            A.push_back(1.0);
            for (std::size_t i = 0; i < n; ++i) B[i].push_back(1.0);
        } else {
            A.push_back(A[d - 1] * (call.a + double(d) - 1.0) /
                        (call.c + double(d) - 1.0));
            for (std::size_t i = 0; i < n; ++i) {
                B[i].push_back(B[i][d - 1] * (call.b[i] + double(d) - 1.0) *
                               call.x[i] / double(d));
            }
        }
        layer[0].push_back(B[0][d]);
        for (std::size_t k = 1; k < n; ++k) {
            Complex acc(0.0, 0.0);
            for (std::size_t j = 0; j <= d; ++j) {
                acc += layer[k - 1][j] * B[k][d - j];
            }
            layer[k].push_back(acc);
        }
        const Complex shell = A[d] * layer[n - 1][d];
        sum += shell;
        last_shells[d % 3] = std::abs(shell);
        if (d >= 1 && std::abs(shell) < tol * std::max(std::abs(sum), 1e-300)) {
            if (++below >= 3) {
                const double err =
                    last_shells[0] + last_shells[1] + last_shells[2];
                return HyperValue{sum, Route::series, err};
            }
        } else {
            below = 0;
        }
    }
    throw SlowConvergence(
        "fd_series: shell cap reached; arguments too close to the polydisc "
        "boundary");
}

} // namespace detail

HyperValue fd_series(const LauricellaCall& call, double tol) {
    return detail::fd_series_capped(call, tol, kShellCap);
}

HyperValue fd_integral(const LauricellaCall& call, double tol) {
    if (!(call.a > 0.0) || !(call.c > call.a)) {
        throw DomainError("fd_integral: requires c > a > 0");
    }
    std::vector<quad::KernelFactor> factors;
    factors.reserve(call.n());
    for (std::size_t i = 0; i < call.n(); ++i) {
        factors.push_back({call.x[i], call.b[i]});
    }
    const quad::Result kern =
        quad::integrate_complex_kernel(call.a, call.c, factors, tol);
    const double pref = special::gamma_ratio(call.a, call.c);
    return HyperValue{pref * kern.value, Route::integral,
                      std::abs(pref) * kern.error_estimate};
}

HyperValue fd_eval(const LauricellaCall& call, double tol) {
    if (call.max_abs_x() <= kSeriesRadius) {
        try {
            return fd_series(call, tol);
        } catch (const SlowConvergence&) {
            // Fall through to the integral representation when possible.
            if (!(call.a > 0.0 && call.c > call.a)) throw;
        }
    }
    return fd_integral(call, tol);
}

HyperValue appell_f1(double a, double b1, double b2, double c, Complex x,
                     Complex y, double tol) {
    return fd_eval(LauricellaCall(a, {b1, b2}, c, {x, y}), tol);
}

Complex f1_three_halves_closed(Complex x, Complex y) {
    const Complex sx = std::sqrt(1.0 - x);
    const Complex sy = std::sqrt(1.0 - y);
    return 2.0 * (sy - sx) / ((x - y) * sx * sy);
}

Complex euler_identity_check(double a) {
    const Complex i(0.0, 1.0);
    const Complex r1 = std::sqrt(-std::exp(-2.0 * i * a));
    const Complex r2 = std::sqrt(-std::exp(2.0 * i * a));
    return 2.0 / (r1 + r2) - 1.0 / std::sin(a);
}

} // namespace hyperpi::hyp
