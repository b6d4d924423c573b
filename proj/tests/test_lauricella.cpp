#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "hyperpi/elliptic.hpp"
#include "hyperpi/gamma.hpp"
#include "hyperpi/lauricella.hpp"

using namespace hyperpi;
using hyp::Complex;
using hyp::LauricellaCall;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.7724538509055160273;

Complex polar(double r, double theta) {
    return Complex(r * std::cos(theta), r * std::sin(theta));
}

} // namespace

TEST_CASE("gamma function", "[lauricella]") {
    REQUIRE(special::gamma_fn(0.5) == kSqrtPi);
    REQUIRE(special::gamma_fn(1.0) == 1.0);
    REQUIRE(special::gamma_fn(5.0) == 24.0);
    REQUIRE(std::abs(special::gamma_fn(2.5) - 0.75 * kSqrtPi) < 1e-15);
    for (double x : {0.25, 0.987, 1.7, 4.2, 9.8, 23.4}) {
        REQUIRE(std::abs(special::gamma_fn(x) - std::tgamma(x)) <
                1e-13 * std::tgamma(x));
    }
    REQUIRE_THROWS_AS(special::gamma_fn(0.0), DomainError);
    REQUIRE_THROWS_AS(special::gamma_fn(-2.0), DomainError);
}

TEST_CASE("series at the origin", "[lauricella]") {
    LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                        {Complex(0.0), Complex(0.0), Complex(0.0)});
    const auto v = hyp::fd_series(call, 1e-13);
    REQUIRE(v.value == Complex(1.0));
    REQUIRE(v.route == hyp::Route::series);
}

TEST_CASE("frozen reference value, both routes", "[lauricella]") {
    LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                        {Complex(0.25), Complex(0.1), Complex(0.04)});
    const auto s = hyp::fd_series(call, 1e-13);
    const auto i = hyp::fd_integral(call, 1e-12);
    REQUIRE(std::abs(s.value.real() - 1.1145177119517597) < 1e-12);
    REQUIRE(std::abs(i.value.real() - 1.1145177119517597) < 1e-11);
    REQUIRE(std::abs(s.value - i.value) < 1e-11);
}

TEST_CASE("single-variable collapse to the elliptic kernel", "[lauricella]") {
    // F_D^(3)(1/2;1/2,1/2,1/2;1 | x,0,0) = 2F1(1/2,1/2;1;x) = (2/pi) K(sqrt x)
    for (double x : {0.2, 0.49, 0.8}) {
        LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                            {Complex(x), Complex(0.0), Complex(0.0)});
        const auto v = hyp::fd_eval(call, 1e-12);
        REQUIRE(std::abs(v.value.real() -
                         2.0 / kPi * elliptic::K(std::sqrt(x))) < 1e-11);
    }
}

TEST_CASE("route equivalence on random calls", "[lauricella]") {
    std::mt19937_64 rng(20240811u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const double a = 0.2 + 1.8 * unit(rng);
        const double c = a + 0.3 + 1.3 * unit(rng);
        std::vector<double> b;
        std::vector<Complex> x;
        for (std::size_t i = 0; i < n; ++i) {
            b.push_back(0.1 + 1.1 * unit(rng));
            x.push_back(polar(0.85 * unit(rng), 2.0 * kPi * unit(rng)));
        }
        LauricellaCall call(a, b, c, x);
        const auto s = hyp::fd_series(call, 1e-13);
        const auto i = hyp::fd_integral(call, 1e-12);
        CAPTURE(trial, a, c);
        REQUIRE(std::abs(s.value - i.value) < 1e-10);
    }
}

TEST_CASE("three-variable order reduction", "[lauricella]") {
    std::mt19937_64 rng(77001u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double a = 0.3 + 1.5 * unit(rng);
        const double c = a + 0.4 + unit(rng);
        const double b1 = 0.2 + unit(rng), b2 = 0.2 + unit(rng),
                     b3 = 0.2 + unit(rng);
        const Complex x = polar(0.8 * unit(rng), 2.0 * kPi * unit(rng));
        const Complex z = polar(0.8 * unit(rng), 2.0 * kPi * unit(rng));
        LauricellaCall fd3(a, {b1, b2, b3}, c, {x, x, z});
        const auto lhs = hyp::fd_eval(fd3, 1e-12);
        const auto rhs = hyp::appell_f1(a, b1 + b2, b3, c, x, z, 1e-12);
        REQUIRE(std::abs(lhs.value - rhs.value) < 1e-10);
    }
}

TEST_CASE("four-variable pairwise collapse", "[lauricella]") {
    std::mt19937_64 rng(99123u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = 0.3 + 1.4 * unit(rng);
        const double c = a + 0.4 + unit(rng);
        const double b1 = 0.2 + 0.6 * unit(rng), b2 = 0.2 + 0.6 * unit(rng);
        const double b3 = 0.2 + 0.6 * unit(rng), b4 = 0.2 + 0.6 * unit(rng);
        const Complex x = polar(0.7 * unit(rng), 2.0 * kPi * unit(rng));
        const Complex y = polar(0.7 * unit(rng), 2.0 * kPi * unit(rng));
        LauricellaCall fd4(a, {b1, b2, b3, b4}, c, {x, x, y, y});
        const auto lhs = hyp::fd_eval(fd4, 1e-12);
        const auto rhs = hyp::appell_f1(a, b1 + b2, b3 + b4, c, x, y, 1e-12);
        REQUIRE(std::abs(lhs.value - rhs.value) < 1e-10);
    }
}

TEST_CASE("conjugate-closed arguments give real values", "[lauricella]") {
    std::mt19937_64 rng(5150u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 15; ++trial) {
        const double a = 0.3 + 1.4 * unit(rng);
        const double c = a + 0.5 + unit(rng);
        const double br = 0.2 + 0.8 * unit(rng);
        const Complex z = polar(0.8 * unit(rng), 2.0 * kPi * unit(rng));
        LauricellaCall call(a, {br, br, 0.4}, c,
                            {z, std::conj(z), Complex(0.6 * unit(rng))});
        const auto v = hyp::fd_eval(call, 1e-12);
        REQUIRE(std::abs(v.value.imag()) < 1e-12);
    }
}

TEST_CASE("permutation symmetry of (b_i, x_i) pairs", "[lauricella]") {
    LauricellaCall base(0.7, {0.5, 0.9, 0.3}, 1.9,
                        {Complex(0.3, 0.2), Complex(-0.4, 0.1), Complex(0.55)});
    LauricellaCall swapped(0.7, {0.9, 0.3, 0.5},
                           1.9,
                           {Complex(-0.4, 0.1), Complex(0.55), Complex(0.3, 0.2)});
    const auto v1 = hyp::fd_eval(base, 1e-13);
    const auto v2 = hyp::fd_eval(swapped, 1e-13);
    REQUIRE(std::abs(v1.value - v2.value) < 1e-12);
}

TEST_CASE("F_1(3/2;1,1;2) closed form", "[lauricella]") {
    const auto v = hyp::appell_f1(1.5, 1.0, 1.0, 2.0, Complex(0.3),
                                  Complex(0.1), 1e-12);
    REQUIRE(std::abs(v.value.real() - 1.4113605594493386) < 1e-11);
    REQUIRE(std::abs(v.value - hyp::f1_three_halves_closed(Complex(0.3),
                                                           Complex(0.1))) <
            1e-11);
    REQUIRE(std::abs(hyp::appell_f1(1.5, 1.0, 1.0, 2.0, Complex(0.0),
                                    Complex(0.0), 1e-12)
                         .value -
                     Complex(1.0)) < 1e-14);
}

TEST_CASE("Euler identity", "[lauricella]") {
    REQUIRE(std::abs(hyp::euler_identity_check(kPi / 2.0)) < 1e-13);
    REQUIRE(std::abs(hyp::euler_identity_check(0.3)) < 1e-13);
    REQUIRE(std::abs(hyp::euler_identity_check(1.0)) < 1e-13);
    for (double a = 0.05; a < kPi / 2.0; a += 0.07) {
        REQUIRE(std::abs(hyp::euler_identity_check(a)) < 1e-13);
    }
}

TEST_CASE("route selection and typed failures", "[lauricella]") {
    // Outside the polydisc: eval must take the integral representation.
    LauricellaCall outside(0.5, {0.5, 0.5, 0.5}, 1.0,
                           {Complex(-4.0), Complex(-2.5), Complex(0.3)});
    REQUIRE(hyp::fd_eval(outside, 1e-12).route == hyp::Route::integral);
    REQUIRE_THROWS_AS(hyp::fd_series(outside, 1e-12), DomainError);

    LauricellaCall bad_ac(2.0, {0.5, 0.5}, 1.0, {Complex(0.2), Complex(0.1)});
    REQUIRE_THROWS_AS(hyp::fd_integral(bad_ac, 1e-12), DomainError);

    LauricellaCall cut(0.5, {0.5, 0.5}, 1.0, {Complex(1.2), Complex(0.1)});
    REQUIRE_THROWS_AS(hyp::fd_integral(cut, 1e-12), BranchCutError);

    REQUIRE_THROWS_AS(LauricellaCall(0.5, {0.5, 0.5}, 1.0, {Complex(0.1)}),
                      DomainError);

    LauricellaCall slow(0.5, {0.5, 0.5}, 1.0, {Complex(0.5), Complex(0.5)});
    REQUIRE_THROWS_AS(hyp::detail::fd_series_capped(slow, 1e-13, 5),
                      SlowConvergence);
}
