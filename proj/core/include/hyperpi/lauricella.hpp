#pragma once

#include <complex>
#include <vector>

#include "hyperpi/errors.hpp"

namespace hyperpi::hyp {

using Complex = std::complex<double>;

enum class Route { series, integral };

/// Parameter bundle for F_D^(n) / F_1:  (a; b_1..b_n; c | x_1..x_n).
struct LauricellaCall {
    double a = 0.0;
    std::vector<double> b;
    double c = 0.0;
    std::vector<Complex> x;

    LauricellaCall(double a_, std::vector<double> b_, double c_,
                   std::vector<Complex> x_);

    std::size_t n() const { return b.size(); }
    double max_abs_x() const;
};

struct HyperValue {
    Complex value{};
    Route route = Route::series;
    double error_estimate = 0.0;
};

/// Multivariate power series summed by total degree, Pochhammer
/// recurrences per variable, one convolution layer per variable.
/// Requires max|x_i| <= 0.95; stops when three consecutive degree shells
/// each contribute < tol * |partial sum|.
HyperValue fd_series(const LauricellaCall& call, double tol = 1e-12);

/// Euler-type integral representation, valid for c > a > 0 and arguments
/// off [1,inf); the workhorse outside the unit polydisc.
HyperValue fd_integral(const LauricellaCall& call, double tol = 1e-12);

/// Route selection: series inside the guard-banded polydisc, integral
/// representation otherwise (or when the series signals slow convergence).
HyperValue fd_eval(const LauricellaCall& call, double tol = 1e-12);

/// Appell F_1 (the two-variable case), route auto-selected.
HyperValue appell_f1(double a, double b1, double b2, double c, Complex x,
                     Complex y, double tol = 1e-12);

/// Closed form of F_1(3/2; 1, 1; 2 | x, y):
///   2 (sqrt(1-y) - sqrt(1-x)) / ((x - y) sqrt((1-x)(1-y))) ,
/// principal square roots.
Complex f1_three_halves_closed(Complex x, Complex y);

/// Returns 2/(sqrt(-e^{-2ia}) + sqrt(-e^{2ia})) - 1/sin(a) with principal
/// square roots; identically zero for a in (0, pi/2).
Complex euler_identity_check(double a);

namespace detail {
// Series with an explicit shell cap, exposed for tests of the
// SlowConvergence signal.
HyperValue fd_series_capped(const LauricellaCall& call, double tol,
                            std::size_t max_shells);
} // namespace detail

} // namespace hyperpi::hyp
