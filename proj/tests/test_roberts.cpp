#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "hyperpi/elliptic.hpp"
#include "hyperpi/roberts.hpp"

using namespace hyperpi;
using roberts::AllComplex;
using roberts::Complex;
using roberts::EightReal;
using roberts::Interval;
using roberts::MixedRoots;
using roberts::OcticSpec;
using roberts::RnRoute;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

TEST_CASE("eight-real octic vanishes at its constructed roots", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(EightReal{1.5, 2.5});
    const double a = 1.5, b = 2.5;
    REQUIRE(spec.p() == (a * a + b * b) * (1.0 + a * a * b * b) / (a * a * b * b));
    for (double r : {a, 1.0 / a, b, 1.0 / b}) {
        REQUIRE(std::abs(spec.evaluate(r)) < 1e-10);
        REQUIRE(std::abs(spec.evaluate(-r)) < 1e-10);
    }
    const auto coeff = spec.coefficients();
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        REQUIRE(coeff[i] == coeff[coeff.size() - 1 - i]);  // reciprocal
    }
}

TEST_CASE("mixed octic vanishes at the unit-circle pair", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(MixedRoots{0.7, 2.0});
    const Complex root = std::exp(Complex(0.0, 0.7));
    REQUIRE(std::abs(spec.evaluate(root)) < 1e-10);
    REQUIRE(std::abs(spec.evaluate(std::conj(root))) < 1e-10);
    REQUIRE(std::abs(spec.evaluate(2.0)) < 1e-10);
    REQUIRE(std::abs(spec.evaluate(0.5)) < 1e-10);
}

TEST_CASE("all-complex octic expansion", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(AllComplex{1.2, 0.4});
    const auto coeff = spec.coefficients();
    REQUIRE(std::abs(coeff[2] -
                     (-2.0) * (std::cos(2.4) + std::cos(0.8))) < 1e-12);
    REQUIRE(std::abs(coeff[4] - (2.0 + 4.0 * std::cos(2.4) * std::cos(0.8))) <
            1e-12);
    const Complex root = std::exp(Complex(0.0, 1.2));
    REQUIRE(std::abs(spec.evaluate(root)) < 1e-12);
}

TEST_CASE("roots recovered through the auxiliary quartic", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(EightReal{1.5, 2.5});
    const auto roots = spec.roots();
    for (double expected : {1.5, -1.5, 1.0 / 1.5, -1.0 / 1.5, 2.5, -2.5, 0.4,
                            -0.4}) {
        double best = 1e9;
        for (const auto& r : roots) {
            best = std::min(best, std::abs(r - Complex(expected)));
        }
        REQUIRE(best < 1e-10);
    }
    for (const auto& r : roots) {
        REQUIRE(std::abs(spec.evaluate(r)) < 1e-9);
    }
}

TEST_CASE("generator constraints", "[roberts]") {
    REQUIRE_THROWS_AS(roberts::build_octic(EightReal{1.0, 2.0}), DomainError);
    REQUIRE_THROWS_AS(roberts::build_octic(EightReal{1.5, 1.5}), DomainError);
    REQUIRE_THROWS_AS(roberts::build_octic(EightReal{2.0, 1.5}), DomainError);
    REQUIRE_THROWS_AS(roberts::build_octic(MixedRoots{0.7, 1.0}), DomainError);
    REQUIRE_THROWS_AS(roberts::build_octic(MixedRoots{0.0, 2.0}), DomainError);
    REQUIRE_THROWS_AS(roberts::build_octic(AllComplex{0.0, 0.4}), DomainError);
}

TEST_CASE("quadrature fixtures", "[roberts]") {
    // Frozen from an independent 25-digit run over the same integrals.
    const OcticSpec er = roberts::build_octic(EightReal{1.5, 2.5});
    auto check = [&](const OcticSpec& s, int n, Interval iv, double expect) {
        const auto r = roberts::rn_quadrature(s, n, iv);
        CAPTURE(n, roberts::to_string(iv));
        REQUIRE(std::abs(r.value - expect) < 1e-11 * (1.0 + expect));
        REQUIRE(r.route == RnRoute::quadrature);
    };
    check(er, 0, Interval::ZeroToInvB, 0.7189469242629061);
    check(er, 0, Interval::InvAToA, 0.78037814449515572);
    check(er, 0, Interval::BToInf, 0.061431220232249539);
    check(er, 2, Interval::ZeroToInvB, 0.061431220232249495);
    check(er, 2, Interval::InvAToA, 0.78037814449515569);
    check(er, 2, Interval::BToInf, 0.71894692426290637);
    check(er, 4, Interval::ZeroToInvB, 0.0075410268973460351);
    check(er, 4, Interval::InvAToA, 1.0571441652143801);

    const OcticSpec mr = roberts::build_octic(MixedRoots{0.7, 2.0});
    check(mr, 0, Interval::ZeroToInvB, 0.80590129756896681);
    check(mr, 0, Interval::BToInf, 0.10183558726050458);
    check(mr, 2, Interval::ZeroToInvB, 0.10183558726050458);
    check(mr, 2, Interval::BToInf, 0.80590129756896681);
    check(mr, 4, Interval::ZeroToInvB, 0.019151091983739141);

    const OcticSpec ac = roberts::build_octic(AllComplex{1.2, 0.4});
    check(ac, 0, Interval::ZeroToInf, 1.2441831712484188);
}

TEST_CASE("power-two symmetry on the full half line", "[roberts]") {
    for (auto [alpha, beta] : {std::pair{1.2, 0.4}, std::pair{0.9, 0.3}}) {
        const OcticSpec spec = roberts::build_octic(AllComplex{alpha, beta});
        const auto r0 = roberts::rn_quadrature(spec, 0, Interval::ZeroToInf);
        const auto r2 = roberts::rn_quadrature(spec, 2, Interval::ZeroToInf);
        REQUIRE(std::abs(r0.value - r2.value) < 1e-10);
    }
}

TEST_CASE("inadmissible requests", "[roberts]") {
    const OcticSpec er = roberts::build_octic(EightReal{1.5, 2.5});
    REQUIRE_THROWS_AS(roberts::rn_quadrature(er, 4, Interval::BToInf),
                      DivergentIntegral);
    REQUIRE_THROWS_AS(roberts::rn_elliptic(er, 4, Interval::BToInf),
                      UnsupportedCombination);
    REQUIRE_THROWS_AS(roberts::rn_lauricella(er, 4, Interval::BToInf),
                      UnsupportedCombination);
    REQUIRE_THROWS_AS(roberts::rn_quadrature(er, 0, Interval::ZeroToInf),
                      DomainError);
    REQUIRE_THROWS_AS(roberts::rn_quadrature(er, 1, Interval::ZeroToInvB),
                      DomainError);
    const OcticSpec ac = roberts::build_octic(AllComplex{1.2, 0.4});
    REQUIRE_THROWS_AS(roberts::rn_quadrature(ac, 0, Interval::ZeroToInvB),
                      DomainError);
    REQUIRE_THROWS_AS(roberts::rn_quadrature(ac, 4, Interval::ZeroToInf),
                      DivergentIntegral);
}

TEST_CASE("split consistency on the middle interval", "[roberts]") {
    const double a = 1.5, b = 2.5;
    auto integrand = [=](bool left) {
        return [=](double x, double dl, double dr) {
            const double fac_lo = left ? dl * (x + 1.0 / a)
                                       : (x - 1.0 / a) * (x + 1.0 / a);
            const double fac_hi = left ? (a - x) * (a + x) : dr * (a + x);
            const double rest = (b - x) * (b + x) * (x - 1.0 / b) * (x + 1.0 / b);
            return quad::Complex(1.0 / std::sqrt(fac_lo * fac_hi * rest));
        };
    };
    const auto lo = quad::integrate(
        integrand(true), quad::Domain::finite(1.0 / a, 1.0, true, false), 1e-12);
    const auto hi = quad::integrate(
        integrand(false), quad::Domain::finite(1.0, a, false, true), 1e-12);
    const OcticSpec spec = roberts::build_octic(EightReal{a, b});
    const auto whole = roberts::rn_quadrature(spec, 0, Interval::InvAToA);
    REQUIRE(std::abs(whole.value - (lo.value.real() + hi.value.real())) <
            1e-10);
}

TEST_CASE("closed forms at spot points", "[roberts]") {
    const double a = 1.5, b = 2.5;
    const OcticSpec er = roberts::build_octic(EightReal{a, b});
    const double km = b * (a * a - 1.0) / (a * (b * b - 1.0));
    const auto mid = roberts::rn_elliptic(er, 0, Interval::InvAToA);
    REQUIRE(std::abs(mid.value - b / (b * b - 1.0) * elliptic::K(km)) < 1e-14);

    const OcticSpec ac = roberts::build_octic(AllComplex{1.2, 0.4});
    const double sa = std::sin(1.2), sb = std::sin(0.4);
    const double expect =
        elliptic::K(std::sqrt(sa * sa - sb * sb) / sa) / (2.0 * sa);
    REQUIRE(std::abs(roberts::rn_elliptic(ac, 0, Interval::ZeroToInf).value -
                     expect) < 1e-14);

    const auto hyp0 = roberts::rn_lauricella(er, 0, Interval::ZeroToInvB);
    REQUIRE(hyp0.parts.size() == 2);
    REQUIRE(hyp0.parts[0].first == "prefactor");
    REQUIRE(std::abs(hyp0.parts[0].second - Complex(kPi / (2.0 * b))) < 1e-14);
}

TEST_CASE("oracle triangle at one off-grid point", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(EightReal{1.2, 3.0});
    const auto q = roberts::rn_quadrature(spec, 2, Interval::BToInf);
    const auto e = roberts::rn_elliptic(spec, 2, Interval::BToInf);
    const auto l = roberts::rn_lauricella(spec, 2, Interval::BToInf);
    REQUIRE(std::abs(e.value - q.value) < 1e-9 * (1.0 + std::abs(q.value)));
    REQUIRE(std::abs(l.value - q.value) < 1e-9 * (1.0 + std::abs(q.value)));
}

TEST_CASE("parts recombine to the value", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(EightReal{1.5, 2.5});
    for (const auto& r :
         {roberts::rn_quadrature(spec, 0, Interval::ZeroToInvB),
          roberts::rn_elliptic(spec, 4, Interval::ZeroToInvB),
          roberts::rn_lauricella(spec, 2, Interval::InvAToA)}) {
        REQUIRE(std::abs(roberts::recombine_parts(r).real() - r.value) < 1e-12);
    }
}

TEST_CASE("modulus blows up as the generators collide", "[roberts]") {
    // b -> a+ drives the [1/a,a] modulus to 1; the closed-form value must
    // grow monotonically.
    double prev = 0.0;
    for (int j = 1; j <= 5; ++j) {
        const OcticSpec spec =
            roberts::build_octic(EightReal{1.5, 1.5 + std::pow(10.0, -j)});
        const double v = roberts::rn_elliptic(spec, 0, Interval::InvAToA).value;
        REQUIRE(v > prev);
        prev = v;
    }
}

TEST_CASE("near-degenerate generators flag reduced accuracy", "[roberts]") {
    const OcticSpec spec = roberts::build_octic(EightReal{1.00005, 2.0});
    REQUIRE(spec.near_degenerate());
    const auto q = roberts::rn_quadrature(spec, 0, Interval::ZeroToInvB);
    REQUIRE(q.error_estimate >= 1e-6);
    const auto e = roberts::rn_elliptic(spec, 0, Interval::ZeroToInvB);
    REQUIRE(e.error_estimate >= 1e-6);
    REQUIRE(std::abs(q.value - e.value) < 1e-6);
}
