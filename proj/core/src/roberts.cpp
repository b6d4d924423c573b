#include "hyperpi/roberts.hpp"

#include <cmath>
#include <utility>

#include "hyperpi/elliptic.hpp"
#include "hyperpi/gamma.hpp"
#include "hyperpi/lauricella.hpp"

namespace hyperpi::roberts {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;
constexpr double kDegenerate = 1e-4;

double sq(double v) { return v * v; }

double checked_modulus(double k, const char* what) {
    k = std::abs(k);
    if (!(k < 1.0)) {
        throw ModulusOutOfRange(std::string("rn_elliptic: modulus ") + what +
                                " outside [0,1)");
    }
    return k;
}

// (y^2 - cos(2 theta))^2 + sin^2(2 theta): the unit-circle quartic factor
// y^4 - 2 cos(2 theta) y^2 + 1 without cancellation near its minimum.
double circle_quartic(double y, double cos2t, double sin2t) {
    return sq(y * y - cos2t) + sq(sin2t);
}

struct MixedAux {
    double s2;  // sqrt(b^4 - 2 b^2 cos(2 alpha) + 1)
    double kc;  // 2 b cos(alpha) / (1 + b^2)
    double ks;  // 2 b sin(alpha) / s2
};

MixedAux mixed_aux(const MixedRoots& m) {
    // b^4 - 2 b^2 cos(2a) + 1 = (b^2-1)^2 + 4 b^2 sin^2(a)
    const double s2sq =
        sq(m.b * m.b - 1.0) + 4.0 * m.b * m.b * sq(std::sin(m.alpha));
    MixedAux aux;
    aux.s2 = std::sqrt(s2sq);
    aux.kc = 2.0 * m.b * std::cos(m.alpha) / (1.0 + m.b * m.b);
    aux.ks = 2.0 * m.b * std::sin(m.alpha) / aux.s2;
    return aux;
}

} // namespace

std::string to_string(Interval iv) {
    switch (iv) {
        case Interval::ZeroToInvB: return "[0,1/b]";
        case Interval::InvAToA: return "[1/a,a]";
        case Interval::BToInf: return "[b,inf)";
        case Interval::ZeroToInf: return "[0,inf)";
    }
    return "?";
}

std::string to_string(RnRoute route) {
    switch (route) {
        case RnRoute::quadrature: return "quadrature";
        case RnRoute::elliptic: return "elliptic";
        case RnRoute::lauricella: return "lauricella";
    }
    return "?";
}

OcticSpec::OcticSpec(Config config) : config_(std::move(config)) {
    if (const auto* r = std::get_if<EightReal>(&config_)) {
        if (!(r->a > 1.0)) {
            throw DomainError("EightReal: requires a > 1");
        }
        if (!(r->b > r->a)) {
            throw DomainError("EightReal: requires b > a");
        }
        p_ = (sq(r->a) + sq(r->b)) * (1.0 + sq(r->a) * sq(r->b)) /
             (sq(r->a) * sq(r->b));
        q_ = (1.0 + sq(sq(r->a)) * sq(sq(r->b)) + sq(sq(r->a) + sq(r->b))) /
             (sq(r->a) * sq(r->b));
    } else if (const auto* m = std::get_if<MixedRoots>(&config_)) {
        if (!(m->b > 1.0)) {
            throw DomainError("MixedRoots: requires b > 1");
        }
        if (std::sin(m->alpha) == 0.0) {
            throw DomainError("MixedRoots: e^{i alpha} must be non-real");
        }
        const double c1 = (1.0 + sq(sq(m->b))) / sq(m->b);  // b^2 + 1/b^2
        const double c2 = 2.0 * std::cos(2.0 * m->alpha);
        p_ = c1 + c2;
        q_ = 2.0 + c1 * c2;
    } else {
        const auto& c = std::get<AllComplex>(config_);
        if (std::sin(c.alpha) == 0.0 || std::sin(c.beta) == 0.0) {
            throw DomainError("AllComplex: both root pairs must be non-real");
        }
        const double c1 = 2.0 * std::cos(2.0 * c.alpha);
        const double c2 = 2.0 * std::cos(2.0 * c.beta);
        p_ = c1 + c2;
        q_ = 2.0 + c1 * c2;
    }
}

std::array<double, 9> OcticSpec::coefficients() const {
    return {1.0, 0.0, -p_, 0.0, q_, 0.0, -p_, 0.0, 1.0};
}

std::array<Complex, 8> OcticSpec::roots() const {
    // Auxiliary quartic in u = x + 1/x: u^4 - (p+4) u^2 + (2p+q+2) = 0.
    const Complex disc = std::sqrt(Complex(sq(p_ + 4.0) - 4.0 * (2.0 * p_ + q_ + 2.0)));
    const Complex w1 = 0.5 * (Complex(p_ + 4.0) + disc);
    const Complex w2 = 0.5 * (Complex(p_ + 4.0) - disc);
    std::array<Complex, 8> out;
    std::size_t k = 0;
    for (const Complex& w : {w1, w2}) {
        const Complex u = std::sqrt(w);
        const Complex s = std::sqrt(u * u - 4.0);
        const Complex x1 = 0.5 * (u + s);
        const Complex x2 = 0.5 * (u - s);  // reciprocal of x1
        out[k++] = x1;
        out[k++] = -x1;
        out[k++] = x2;
        out[k++] = -x2;
    }
    return out;
}

double OcticSpec::evaluate(double x) const {
    const double y = x * x;
    return (((y - p_) * y + q_) * y - p_) * y + 1.0;
}

Complex OcticSpec::evaluate(Complex x) const {
    const Complex y = x * x;
    return (((y - p_) * y + q_) * y - p_) * y + 1.0;
}

bool OcticSpec::interval_admissible(Interval iv) const {
    if (std::holds_alternative<EightReal>(config_)) {
        return iv == Interval::ZeroToInvB || iv == Interval::InvAToA ||
               iv == Interval::BToInf;
    }
    if (std::holds_alternative<MixedRoots>(config_)) {
        return iv == Interval::ZeroToInvB || iv == Interval::BToInf;
    }
    return iv == Interval::ZeroToInf;
}

bool OcticSpec::near_degenerate() const {
    if (const auto* r = std::get_if<EightReal>(&config_)) {
        return r->a - 1.0 < kDegenerate || r->b - r->a < kDegenerate;
    }
    if (const auto* m = std::get_if<MixedRoots>(&config_)) {
        return m->b - 1.0 < kDegenerate ||
               std::abs(std::sin(m->alpha)) < kDegenerate;
    }
    const auto& c = std::get<AllComplex>(config_);
    return std::abs(std::abs(std::sin(c.alpha)) -
                    std::abs(std::sin(c.beta))) < kDegenerate ||
           std::abs(std::sin(c.alpha)) < kDegenerate ||
           std::abs(std::sin(c.beta)) < kDegenerate;
}

OcticSpec build_octic(const Config& config) { return OcticSpec(config); }

Complex recombine_parts(const ReductionResult& r) {
    Complex acc = r.route == RnRoute::lauricella ? Complex(1.0) : Complex(0.0);
    for (const auto& [name, v] : r.parts) {
        if (r.route == RnRoute::lauricella) {
            acc *= v;
        } else {
            acc += v;
        }
    }
    return acc;
}

namespace {

void require_admissible(const OcticSpec& spec, int n, Interval iv) {
    if (n != 0 && n != 2 && n != 4) {
        throw DomainError("rn: power n must be 0, 2 or 4");
    }
    if (!spec.interval_admissible(iv)) {
        throw DomainError("rn: interval " + to_string(iv) +
                          " not admissible for this root configuration");
    }
}

bool unbounded(Interval iv) {
    return iv == Interval::BToInf || iv == Interval::ZeroToInf;
}

// ---------------------------------------------------------------- quadrature

quad::Result quad_eight_real(const EightReal& g, int n, Interval iv,
                             double tol) {
    const double a = g.a, b = g.b;
    switch (iv) {
        case Interval::ZeroToInvB: {
            auto f = [=](double x, double, double dr) {
                const double prod = (a - x) * (a + x) * (1.0 / a - x) *
                                    (1.0 / a + x) * (b - x) * (b + x) * dr *
                                    (1.0 / b + x);
                return quad::Complex(std::pow(x, n) / std::sqrt(prod));
            };
            return quad::integrate(f, quad::Domain::finite(0.0, 1.0 / b, false, true), tol);
        }
        case Interval::InvAToA: {
            auto f = [=](double x, double dl, double dr) {
                const double prod = dl * (x + 1.0 / a) * dr * (a + x) *
                                    (b - x) * (b + x) * (x - 1.0 / b) *
                                    (x + 1.0 / b);
                return quad::Complex(std::pow(x, n) / std::sqrt(prod));
            };
            return quad::integrate(f, quad::Domain::finite(1.0 / a, a, true, true), tol);
        }
        case Interval::BToInf: {
            auto f = [=](double x, double dl, double) {
                const double inv = 1.0 / x;
                const double prod = (1.0 - a * inv) * (1.0 + a * inv) *
                                    (1.0 - inv / a) * (1.0 + inv / a) *
                                    (dl * inv) * (1.0 + b * inv) *
                                    (1.0 - inv / b) * (1.0 + inv / b);
                return quad::Complex(std::pow(inv, 4 - n) / std::sqrt(prod));
            };
            return quad::integrate(f, quad::Domain::semi_infinite(b, true), tol);
        }
        default: break;
    }
    throw DomainError("rn_quadrature: bad interval");
}

quad::Result quad_mixed(const MixedRoots& g, int n, Interval iv, double tol) {
    const double b = g.b;
    const double c2t = std::cos(2.0 * g.alpha);
    const double s2t = std::sin(2.0 * g.alpha);
    if (iv == Interval::ZeroToInvB) {
        auto f = [=](double x, double, double dr) {
            const double prod = dr * (1.0 / b + x) * (b - x) * (b + x) *
                                circle_quartic(x, c2t, s2t);
            return quad::Complex(std::pow(x, n) / std::sqrt(prod));
        };
        return quad::integrate(f, quad::Domain::finite(0.0, 1.0 / b, false, true), tol);
    }
    auto f = [=](double x, double dl, double) {
        const double inv = 1.0 / x;
        const double prod = (dl * inv) * (1.0 + b * inv) * (1.0 - inv / b) *
                            (1.0 + inv / b) * circle_quartic(inv, c2t, s2t);
        return quad::Complex(std::pow(inv, 4 - n) / std::sqrt(prod));
    };
    return quad::integrate(f, quad::Domain::semi_infinite(b, true), tol);
}

quad::Result quad_all_complex(const AllComplex& g, int n, double tol) {
    const double ca = std::cos(2.0 * g.alpha), sa = std::sin(2.0 * g.alpha);
    const double cb = std::cos(2.0 * g.beta), sb = std::sin(2.0 * g.beta);
    auto f = [=](double x, double, double) {
        if (x <= 1.0) {
            const double prod =
                circle_quartic(x, ca, sa) * circle_quartic(x, cb, sb);
            return quad::Complex(std::pow(x, n) / std::sqrt(prod));
        }
        const double inv = 1.0 / x;
        const double prod =
            circle_quartic(inv, ca, sa) * circle_quartic(inv, cb, sb);
        return quad::Complex(std::pow(inv, 4 - n) / std::sqrt(prod));
    };
    return quad::integrate(f, quad::Domain::semi_infinite(0.0, false), tol);
}

// ------------------------------------------------------------------ elliptic

using Parts = std::vector<std::pair<std::string, Complex>>;

ReductionResult elliptic_result(Parts parts, double near_penalty) {
    ReductionResult r;
    r.route = RnRoute::elliptic;
    double scale = 0.0;
    Complex sum(0.0, 0.0);
    for (const auto& [name, v] : parts) {
        sum += v;
        scale = std::max(scale, std::abs(v));
    }
    r.value = sum.real();
    r.parts = std::move(parts);
    r.error_estimate = std::max(1e-14 * scale, near_penalty);
    return r;
}

ReductionResult elliptic_eight_real(const EightReal& g, int n, Interval iv,
                                    double penalty) {
    const double a = g.a, b = g.b, b2 = b * b;
    const double km = checked_modulus(b * (a * a - 1.0) / (a * (b2 - 1.0)), "k-");
    const double kp = checked_modulus(b * (a * a + 1.0) / (a * (b2 + 1.0)), "k+");
    const double Km = elliptic::K(km);
    const double Kp = elliptic::K(kp);
    switch (n) {
        case 0:
            switch (iv) {
                case Interval::ZeroToInvB:
                    return elliptic_result(
                        {{"K_plus_term", 0.5 * b / (b2 + 1.0) * Kp},
                         {"K_minus_term", 0.5 * b / (b2 - 1.0) * Km}},
                        penalty);
                case Interval::InvAToA:
                    return elliptic_result(
                        {{"K_minus_term", b / (b2 - 1.0) * Km}}, penalty);
                case Interval::BToInf:
                    return elliptic_result(
                        {{"K_minus_term", 0.5 * b / (b2 - 1.0) * Km},
                         {"K_plus_term", -0.5 * b / (b2 + 1.0) * Kp}},
                        penalty);
                default: break;
            }
            break;
        case 2:
            switch (iv) {
                case Interval::ZeroToInvB:
                    return elliptic_result(
                        {{"K_minus_term", 0.5 * b / (b2 - 1.0) * Km},
                         {"K_plus_term", -0.5 * b / (b2 + 1.0) * Kp}},
                        penalty);
                case Interval::InvAToA:
                    return elliptic_result(
                        {{"K_minus_term", b / (b2 - 1.0) * Km}}, penalty);
                case Interval::BToInf:
                    return elliptic_result(
                        {{"K_minus_term", 0.5 * b / (b2 - 1.0) * Km},
                         {"K_plus_term", 0.5 * b / (b2 + 1.0) * Kp}},
                        penalty);
                default: break;
            }
            break;
        case 4: {
            const double b4 = b2 * b2;
            const double Em = elliptic::E(km);
            const double Ep = elliptic::E(kp);
            if (iv == Interval::ZeroToInvB) {
                return elliptic_result(
                    {{"K_minus_term",
                      (b4 - b2 + 1.0) / (2.0 * b * (b2 - 1.0)) * Km},
                     {"K_plus_term",
                      -(b4 + b2 + 1.0) / (2.0 * b * (b2 + 1.0)) * Kp},
                     {"E_minus_term", (1.0 - b2) / (2.0 * b) * Em},
                     {"E_plus_term", (1.0 + b2) / (2.0 * b) * Ep}},
                    penalty);
            }
            if (iv == Interval::InvAToA) {
                return elliptic_result(
                    {{"K_term", (b4 - b2 + 1.0) / (b * (b2 - 1.0)) * Km},
                     {"E_term", -(b2 - 1.0) / b * Em}},
                    penalty);
            }
            break;
        }
        default: break;
    }
    throw UnsupportedCombination("rn_elliptic: no closed form for n=" +
                                 std::to_string(n) + " on " + to_string(iv));
}

ReductionResult elliptic_mixed(const MixedRoots& g, int n, Interval iv,
                               double penalty) {
    const double b = g.b, b2 = b * b;
    const MixedAux aux = mixed_aux(g);
    const double kc = checked_modulus(aux.kc, "k_cos");
    const double ks = checked_modulus(aux.ks, "k_sin");
    const double Kc = elliptic::K(kc);
    const double Ks = elliptic::K(ks);
    const bool plus_combination =
        (n == 0 && iv == Interval::ZeroToInvB) ||
        (n == 2 && iv == Interval::BToInf);
    if (n == 0 || n == 2) {
        if (plus_combination) {
            return elliptic_result(
                {{"K_cos_term", 0.5 * b / (1.0 + b2) * Kc},
                 {"K_sin_term", 0.5 * b / aux.s2 * Ks}},
                penalty);
        }
        return elliptic_result({{"K_sin_term", 0.5 * b / aux.s2 * Ks},
                                {"K_cos_term", -0.5 * b / (1.0 + b2) * Kc}},
                               penalty);
    }
    if (n == 4 && iv == Interval::ZeroToInvB) {
        const double b4 = b2 * b2;
        const double Ec = elliptic::E(kc);
        const double Es = elliptic::E(ks);
        return elliptic_result(
            {{"E_cos_term", (1.0 + b2) / (2.0 * b) * Ec},
             {"K_cos_term", -(b4 + b2 + 1.0) / (2.0 * b * (1.0 + b2)) * Kc},
             {"K_sin_term", (b4 - b2 + 1.0) / (2.0 * b * aux.s2) * Ks},
             {"E_sin_term", -aux.s2 / (2.0 * b) * Es}},
            penalty);
    }
    throw UnsupportedCombination("rn_elliptic: no closed form for n=" +
                                 std::to_string(n) + " on " + to_string(iv));
}

ReductionResult elliptic_all_complex(const AllComplex& g, double penalty) {
    double sa = std::abs(std::sin(g.alpha));
    double sb = std::abs(std::sin(g.beta));
    if (sa < sb) std::swap(sa, sb);  // the integral is symmetric in the pair
    const double k =
        checked_modulus(std::sqrt((sa - sb) * (sa + sb)) / sa, "k");
    return elliptic_result(
        {{"K_term", 1.0 / (2.0 * sa) * elliptic::K(k)}}, penalty);
}

// ---------------------------------------------------------------- lauricella

ReductionResult lauricella_result(Complex prefactor, const hyp::HyperValue& fd,
                                  double penalty) {
    ReductionResult r;
    r.route = RnRoute::lauricella;
    const Complex full = prefactor * fd.value;
    r.value = full.real();
    r.parts = {{"prefactor", prefactor}, {"fd", fd.value}};
    r.error_estimate = std::max(
        std::abs(prefactor) * fd.error_estimate + std::abs(full.imag()),
        penalty);
    return r;
}

ReductionResult lauricella_eight_real(const EightReal& g, int n, Interval iv,
                                      double tol, double penalty) {
    const double a = g.a, b = g.b;
    const double a2 = a * a, b2 = b * b;
    const double s = n;
    const std::vector<double> halves{0.5, 0.5, 0.5};
    switch (iv) {
        case Interval::ZeroToInvB: {
            hyp::LauricellaCall call(
                (1.0 + s) / 2.0, halves, (s + 2.0) / 2.0,
                {Complex(a2 / b2), Complex(1.0 / (a2 * b2)),
                 Complex(1.0 / (b2 * b2))});
            const double pref = std::pow(1.0 / b, s) / (2.0 * b) * kSqrtPi *
                                special::gamma_fn((s + 1.0) / 2.0) /
                                special::gamma_fn((s + 2.0) / 2.0);
            return lauricella_result(pref, hyp::fd_eval(call, tol), penalty);
        }
        case Interval::InvAToA: {
            const double delta = (b2 - a2) * (a2 * b2 - 1.0);
            hyp::LauricellaCall call(
                0.5, {(1.0 - s) / 2.0, 0.5, 0.5}, 1.0,
                {Complex(1.0 - a2 * a2),
                 Complex((1.0 - a2 * a2) * b2 / (b2 - a2)),
                 Complex((a2 * a2 - 1.0) / (a2 * b2 - 1.0))});
            const double pref =
                kPi * std::pow(a, 3.0 - s) * b / (2.0 * std::sqrt(delta));
            return lauricella_result(pref, hyp::fd_eval(call, tol), penalty);
        }
        case Interval::BToInf: {
            const double lambda =
                (b2 * b2 - 1.0) * (b2 - a2) * (a2 * b2 - 1.0);
            hyp::LauricellaCall call(
                0.5, halves, 2.0 - s / 2.0,
                {Complex(1.0 / (1.0 - b2 * b2)),
                 Complex(1.0 / (1.0 - a2 * b2)), Complex(a2 / (a2 - b2))});
            const double pref = std::pow(b, s) * a * b /
                                (2.0 * std::sqrt(lambda)) * kSqrtPi *
                                special::gamma_fn((3.0 - s) / 2.0) /
                                special::gamma_fn(2.0 - s / 2.0);
            return lauricella_result(pref, hyp::fd_eval(call, tol), penalty);
        }
        default: break;
    }
    throw DomainError("rn_lauricella: bad interval");
}

ReductionResult lauricella_mixed(const MixedRoots& g, int n, Interval iv,
                                 double tol, double penalty) {
    const double b = g.b, b2 = b * b;
    const double s = n;
    const Complex e2ia = std::exp(Complex(0.0, 2.0 * g.alpha));
    const Complex em2ia = std::exp(Complex(0.0, -2.0 * g.alpha));
    const std::vector<double> halves{0.5, 0.5, 0.5};
    if (iv == Interval::ZeroToInvB) {
        hyp::LauricellaCall call(
            (s + 1.0) / 2.0, halves, (s + 2.0) / 2.0,
            {Complex(1.0 / (b2 * b2)), em2ia / b2, e2ia / b2});
        const double pref = std::pow(1.0 / b, s) * kSqrtPi / (2.0 * b) *
                            special::gamma_fn((s + 1.0) / 2.0) /
                            special::gamma_fn((s + 2.0) / 2.0);
        return lauricella_result(pref, hyp::fd_eval(call, tol), penalty);
    }
    const MixedAux aux = mixed_aux(g);
    hyp::LauricellaCall call(0.5, halves, (4.0 - s) / 2.0,
                             {Complex(1.0 / (1.0 - b2 * b2)),
                              1.0 / (1.0 - b2 * em2ia),
                              1.0 / (1.0 - b2 * e2ia)});
    const double pref = std::pow(b, s + 1.0) * kSqrtPi /
                        (2.0 * std::sqrt(b2 * b2 - 1.0) * aux.s2) *
                        special::gamma_fn((3.0 - s) / 2.0) /
                        special::gamma_fn(2.0 - s / 2.0);
    return lauricella_result(pref, hyp::fd_eval(call, tol), penalty);
}

ReductionResult lauricella_all_complex(const AllComplex& g, int n, double tol,
                                       double penalty) {
    const double s = n;
    const Complex i(0.0, 1.0);
    hyp::LauricellaCall call(
        (3.0 - s) / 2.0, {0.5, 0.5, 0.5, 0.5}, 2.0,
        {1.0 + std::exp(2.0 * i * g.alpha), 1.0 + std::exp(-2.0 * i * g.alpha),
         1.0 + std::exp(2.0 * i * g.beta), 1.0 + std::exp(-2.0 * i * g.beta)});
    const double pref =
        kPi * (1.0 - s) / (4.0 * std::cos(kPi * s / 2.0));
    return lauricella_result(pref, hyp::fd_eval(call, tol), penalty);
}

} // namespace

ReductionResult rn_quadrature(const OcticSpec& spec, int n, Interval iv,
                              double tol) {
    require_admissible(spec, n, iv);
    if (n == 4 && unbounded(iv)) {
        throw DivergentIntegral(
            "rn_quadrature: x^4/sqrt(P) diverges on unbounded intervals");
    }
    quad::Result q;
    if (const auto* r = std::get_if<EightReal>(&spec.config())) {
        q = quad_eight_real(*r, n, iv, tol);
    } else if (const auto* m = std::get_if<MixedRoots>(&spec.config())) {
        q = quad_mixed(*m, n, iv, tol);
    } else {
        q = quad_all_complex(std::get<AllComplex>(spec.config()), n, tol);
    }
    ReductionResult out;
    out.value = q.value.real();
    out.route = RnRoute::quadrature;
    out.parts = {{"integral", q.value}};
    out.error_estimate = q.error_estimate;
    if (spec.near_degenerate()) {
        out.error_estimate = std::max(out.error_estimate, 1e-6);
    }
    return out;
}

ReductionResult rn_elliptic(const OcticSpec& spec, int n, Interval iv) {
    require_admissible(spec, n, iv);
    if (n == 4 && unbounded(iv)) {
        throw UnsupportedCombination(
            "rn_elliptic: no closed form, integral diverges on unbounded "
            "intervals");
    }
    const double penalty = spec.near_degenerate() ? 1e-6 : 0.0;
    if (const auto* r = std::get_if<EightReal>(&spec.config())) {
        return elliptic_eight_real(*r, n, iv, penalty);
    }
    if (const auto* m = std::get_if<MixedRoots>(&spec.config())) {
        return elliptic_mixed(*m, n, iv, penalty);
    }
    return elliptic_all_complex(std::get<AllComplex>(spec.config()), penalty);
}

ReductionResult rn_lauricella(const OcticSpec& spec, int n, Interval iv,
                              double tol) {
    require_admissible(spec, n, iv);
    if (n == 4 && unbounded(iv)) {
        throw UnsupportedCombination(
            "rn_lauricella: s < 3 required on unbounded intervals");
    }
    const double penalty = spec.near_degenerate() ? 1e-6 : 0.0;
    if (const auto* r = std::get_if<EightReal>(&spec.config())) {
        return lauricella_eight_real(*r, n, iv, tol, penalty);
    }
    if (const auto* m = std::get_if<MixedRoots>(&spec.config())) {
        return lauricella_mixed(*m, n, iv, tol, penalty);
    }
    return lauricella_all_complex(std::get<AllComplex>(spec.config()), n, tol,
                                  penalty);
}

} // namespace hyperpi::roberts
