#include "hyperpi/catalog.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <thread>

#include "hyperpi/elliptic.hpp"
#include "hyperpi/lauricella.hpp"

namespace hyperpi::catalog {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using Complex = std::complex<double>;
using RouteValues = std::vector<std::pair<std::string, double>>;

double sq(double v) { return v * v; }

// ------------------------------------------------------------ shared pieces

struct EightRealKs {
    double km, kp, Km, Kp;
};

EightRealKs eight_real_ks(double a, double b) {
    EightRealKs r;
    r.km = b * (a * a - 1.0) / (a * (b * b - 1.0));
    r.kp = b * (a * a + 1.0) / (a * (b * b + 1.0));
    if (!(r.km >= 0.0 && r.km < 1.0) || !(r.kp >= 0.0 && r.kp < 1.0)) {
        throw ModulusOutOfRange("modulus outside [0,1)");
    }
    r.Km = elliptic::K(r.km);
    r.Kp = elliptic::K(r.kp);
    return r;
}

struct MixedKs {
    double s2, kc, ks, Kc, Ks;
};

MixedKs mixed_ks(double alpha, double b) {
    MixedKs r;
    r.s2 = std::sqrt(sq(b * b - 1.0) + 4.0 * b * b * sq(std::sin(alpha)));
    r.kc = std::abs(2.0 * b * std::cos(alpha)) / (1.0 + b * b);
    r.ks = std::abs(2.0 * b * std::sin(alpha)) / r.s2;
    if (!(r.kc < 1.0) || !(r.ks < 1.0)) {
        throw ModulusOutOfRange("modulus outside [0,1)");
    }
    r.Kc = elliptic::K(r.kc);
    r.Ks = elliptic::K(r.ks);
    return r;
}

std::vector<Complex> eight_left_args(double a, double b) {
    // Arguments shared by the [0,1/b] family.
    return {Complex(sq(a) / sq(b)), Complex(1.0 / (sq(a) * sq(b))),
            Complex(1.0 / sq(sq(b)))};
}

std::vector<Complex> eight_mid_args(double a, double b) {
    // Arguments shared by the [1/a,a] family.
    const double a4 = sq(sq(a));
    return {Complex(1.0 - a4), Complex((1.0 - a4) * sq(b) / (sq(b) - sq(a))),
            Complex((a4 - 1.0) / (sq(a) * sq(b) - 1.0))};
}

std::vector<Complex> eight_tail_args(double a, double b) {
    // Arguments shared by the [b,inf) family.
    return {Complex(1.0 / (1.0 - sq(sq(b)))),
            Complex(1.0 / (1.0 - sq(a) * sq(b))),
            Complex(sq(a) / (sq(a) - sq(b)))};
}

std::vector<Complex> mixed_left_args(double alpha, double b) {
    const Complex i(0.0, 1.0);
    return {Complex(1.0 / sq(sq(b))), std::exp(-2.0 * i * alpha) / sq(b),
            std::exp(2.0 * i * alpha) / sq(b)};
}

std::vector<Complex> mixed_tail_args(double alpha, double b) {
    const Complex i(0.0, 1.0);
    return {Complex(1.0 / (1.0 - sq(sq(b)))),
            1.0 / (1.0 - sq(b) * std::exp(-2.0 * i * alpha)),
            1.0 / (1.0 - sq(b) * std::exp(2.0 * i * alpha))};
}

std::vector<Complex> circle_args(double alpha, double beta) {
    const Complex i(0.0, 1.0);
    return {1.0 + std::exp(2.0 * i * alpha), 1.0 + std::exp(-2.0 * i * alpha),
            1.0 + std::exp(2.0 * i * beta), 1.0 + std::exp(-2.0 * i * beta)};
}

// Assembles pi = num / (c0 + c1 * Re F) and records the pieces.
double assemble(double num, double c0, double c1, const hyp::HyperValue& fd,
                RouteValues& rv) {
    rv.emplace_back("numerator", num);
    rv.emplace_back("den_const", c0);
    rv.emplace_back("den_coeff", c1);
    rv.emplace_back("fd_re", fd.value.real());
    rv.emplace_back("fd_im", fd.value.imag());
    return num / (c0 + c1 * fd.value.real());
}

// --------------------------------------------------------------- predicates

bool dom_eight_real(const Params& p) { return p.a > 1.0 && p.b > p.a; }
bool dom_b_gt_1_two(const Params& p) {
    return std::isfinite(p.a) && p.b > 1.0;
}
bool dom_b_gt_1_one(const Params& p) { return p.b > 1.0; }
bool dom_sines(const Params& p) {
    return std::sin(p.a) > std::sin(p.b) && std::sin(p.b) > 0.0;
}

// --------------------------------------------------------------- evaluators

using EvalFn = double (*)(const Params&, double, RouteValues&);

double eval_tesiA(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double b2 = sq(p.b);
    const double num = b2 * k.Kp / (b2 + 1.0) + b2 * k.Km / (b2 - 1.0);
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             eight_left_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_pibis(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double a = p.a, b = p.b;
    const double num = 2.0 * std::sqrt((sq(b) - sq(a)) * (sq(a) * sq(b) - 1.0)) /
                       (a * sq(a) * (sq(b) - 1.0)) * k.Km;
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             eight_mid_args(a, b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_piter(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double a = p.a, b = p.b, b2 = sq(b);
    const double num =
        2.0 / a *
        std::sqrt((b2 - sq(a)) * (sq(a) * b2 - 1.0) / (sq(b2) - 1.0)) *
        ((1.0 + b2) * k.Km + (1.0 - b2) * k.Kp);
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 2.0,
                             eight_tail_args(a, b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_cor1uno1(const Params& p, double tol, RouteValues& rv) {
    const double b2 = sq(p.b);
    const double Kt = elliptic::K(2.0 * p.b / (1.0 + b2));
    const double num = 2.0 * b2 * (b2 - 1.0) * Kt / (1.0 + b2);
    const auto fd = hyp::appell_f1(0.5, 1.0, 0.5, 1.0, Complex(1.0 / b2),
                                   Complex(1.0 / sq(b2)), tol);
    return assemble(num, -b2, 2.0 * (b2 - 1.0), fd, rv);
}

double eval_koro3(const Params& p, double tol, RouteValues& rv) {
    const double b2 = sq(p.b);
    const double root = std::sqrt(sq(b2) - 1.0);
    const double Kt = elliptic::K(2.0 * p.b / (1.0 + b2));
    const double num = 2.0 * sq(b2 - 1.0) * Kt / root;
    const auto fd =
        hyp::appell_f1(0.5, 1.0, 0.5, 2.0, Complex(1.0 / (1.0 - b2)),
                       Complex(1.0 / (1.0 - sq(b2))), tol);
    return assemble(num, root, -1.0, fd, rv);
}

double eval_ipcomlunotesi(const Params& p, double tol, RouteValues& rv) {
    const auto k = mixed_ks(p.a, p.b);
    const double b2 = sq(p.b);
    const double num = b2 * (k.Kc / (1.0 + b2) + k.Ks / k.s2);
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             mixed_left_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_ipcom2duetesi(const Params& p, double tol, RouteValues& rv) {
    const auto k = mixed_ks(p.a, p.b);
    const double b2 = sq(p.b);
    const double num = 2.0 * std::sqrt(sq(b2) - 1.0) * k.s2 *
                       (k.Ks / k.s2 - k.Kc / (1.0 + b2));
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 2.0,
                             mixed_tail_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_picomcom(const Params& p, double tol, RouteValues& rv,
                     double fd_a) {
    const double sa = std::sin(p.a), sb = std::sin(p.b);
    const double k = std::sqrt((sa - sb) * (sa + sb)) / sa;
    if (!(k >= 0.0 && k < 1.0)) throw ModulusOutOfRange("modulus outside [0,1)");
    const double num = 2.0 * elliptic::K(k) / sa;
    hyp::LauricellaCall call(fd_a, {0.5, 0.5, 0.5, 0.5}, 2.0,
                             circle_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_picomcomeq(const Params& p, double tol, RouteValues& rv) {
    return eval_picomcom(p, tol, rv, 1.5);
}

double eval_picomcomeqb(const Params& p, double tol, RouteValues& rv) {
    return eval_picomcom(p, tol, rv, 0.5);
}

double eval_11unoth(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double b2 = sq(p.b);
    const double num =
        2.0 * sq(b2) * (k.Km / (b2 - 1.0) - k.Kp / (b2 + 1.0));
    hyp::LauricellaCall call(1.5, {0.5, 0.5, 0.5}, 2.0,
                             eight_left_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_cor11uno1(const Params& p, double tol, RouteValues& rv) {
    const double b2 = sq(p.b);
    const double Kt = elliptic::K(2.0 * p.b / (1.0 + b2));
    const double num = 2.0 * sq(b2) * (b2 - 1.0) * Kt / (1.0 + b2);
    const auto fd = hyp::appell_f1(1.5, 1.0, 0.5, 2.0, Complex(1.0 / b2),
                                   Complex(1.0 / sq(b2)), tol);
    return assemble(num, sq(b2), 1.0 - b2, fd, rv);
}

double eval_22dueth(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double a = p.a, b = p.b;
    const double num = 2.0 *
                       std::sqrt((sq(b) - sq(a)) * (sq(a) * sq(b) - 1.0)) *
                       k.Km / (a * (sq(b) - 1.0));
    hyp::LauricellaCall call(0.5, {-0.5, 0.5, 0.5}, 1.0,
                             eight_mid_args(a, b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_33treth(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double a = p.a, b = p.b, b2 = sq(b);
    const double num = std::sqrt((b2 - sq(a)) * (sq(a) * b2 - 1.0)) *
                       ((b2 + 1.0) * k.Km + (b2 - 1.0) * k.Kp) /
                       (a * b2 * std::sqrt(sq(b2) - 1.0));
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             eight_tail_args(a, b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_33trecorth(const Params& p, double tol, RouteValues& rv) {
    const double b2 = sq(p.b);
    const double Kt = elliptic::K(2.0 * p.b / (1.0 + b2));
    const double num = 2.0 * sq(b2 - 1.0) * Kt;
    const auto fd =
        hyp::appell_f1(0.5, 1.0, 0.5, 1.0, Complex(1.0 / (1.0 - b2)),
                       Complex(1.0 / (1.0 - sq(b2))), tol);
    return assemble(num, 1.0 - sq(b2), 2.0 * b2 * std::sqrt(sq(b2) - 1.0),
                    fd, rv);
}

double eval_unobbhyy(const Params& p, double tol, RouteValues& rv) {
    const auto k = mixed_ks(p.a, p.b);
    const double b2 = sq(p.b);
    const double num = 2.0 * sq(b2) * ((1.0 + b2) * k.Ks - k.s2 * k.Kc) /
                       ((1.0 + b2) * k.s2);
    hyp::LauricellaCall call(1.5, {0.5, 0.5, 0.5}, 2.0,
                             mixed_left_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_ipcom2duetesix(const Params& p, double tol, RouteValues& rv) {
    const auto k = mixed_ks(p.a, p.b);
    const double b2 = sq(p.b);
    const double num = std::sqrt(sq(b2) - 1.0) * k.s2 *
                       (k.Ks / k.s2 + k.Kc / (1.0 + b2)) / b2;
    hyp::LauricellaCall call(0.5, {0.5, 0.5, 0.5}, 1.0,
                             mixed_tail_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_42th(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double b2 = sq(p.b), b4 = sq(b2);
    const double Em = elliptic::E(k.km);
    const double Ep = elliptic::E(k.kp);
    const double KK = (b4 - b2 + 1.0) / (b2 - 1.0) * k.Km -
                      (b4 + b2 + 1.0) / (b2 + 1.0) * k.Kp;
    const double EE = (1.0 - b2) * Em + (1.0 + b2) * Ep;
    const double num = 8.0 / 3.0 * b4 * (KK + EE);
    hyp::LauricellaCall call(2.5, {0.5, 0.5, 0.5}, 3.0,
                             eight_left_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_corth42(const Params& p, double tol, RouteValues& rv) {
    const double b2 = sq(p.b), b4 = sq(b2), b6 = b4 * b2;
    const double kt = 2.0 * p.b / (1.0 + b2);
    const double Kt = elliptic::K(kt);
    const double Et = elliptic::E(kt);
    const double num = 8.0 * b4 *
                       ((b6 - 1.0) * Kt + (1.0 - b2) * sq(1.0 + b2) * Et) /
                       (1.0 + b2);
    const auto fd = hyp::appell_f1(2.5, 1.0, 0.5, 3.0, Complex(1.0 / b2),
                                   Complex(1.0 / b4), tol);
    return assemble(num, 4.0 * b6, 3.0 * (1.0 - b2), fd, rv);
}

double eval_quacinen(const Params& p, double tol, RouteValues& rv) {
    const auto k = eight_real_ks(p.a, p.b);
    const double a = p.a, b = p.b, b2 = sq(b), b4 = sq(b2);
    const double Em = elliptic::E(k.km);
    const double num =
        2.0 * a * std::sqrt(b2 - sq(a)) * std::sqrt(sq(a) * b2 - 1.0) /
        (b2 * (b2 - 1.0)) *
        ((1.0 - b2 + b4) * k.Km - sq(b2 - 1.0) * Em);
    hyp::LauricellaCall call(0.5, {-1.5, 0.5, 0.5}, 1.0,
                             eight_mid_args(a, b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

double eval_th46pi(const Params& p, double tol, RouteValues& rv) {
    const auto k = mixed_ks(p.a, p.b);
    const double b2 = sq(p.b), b4 = sq(b2);
    const double Ec = elliptic::E(k.kc);
    const double Es = elliptic::E(k.ks);
    const double bracket = (1.0 + b2) * Ec -
                           (b4 + b2 + 1.0) / (1.0 + b2) * k.Kc +
                           (b4 - b2 + 1.0) / k.s2 * k.Ks - k.s2 * Es;
    const double num = 8.0 * b4 / 3.0 * bracket;
    hyp::LauricellaCall call(2.5, {0.5, 0.5, 0.5}, 3.0,
                             mixed_left_args(p.a, p.b));
    return assemble(num, 0.0, 1.0, hyp::fd_eval(call, tol), rv);
}

// ------------------------------------------------------------------ catalog

enum class GridKind { eight_real, mixed, circle, one_param };

struct IdentityDef {
    const char* id;
    const char* description;
    int arity;
    const char* domain;
    bool (*in_domain)(const Params&);
    EvalFn eval;
    GridKind grid;
};

const IdentityDef kCatalog[] = {
    {"tesiA",
     "two K terms over F_D^(3); eight real roots, interval [0,1/b], n=0", 2,
     "1 < a < b", dom_eight_real, eval_tesiA, GridKind::eight_real},
    {"cor1uno1",
     "one-parameter limit of tesiA; K(2b/(1+b^2)) over an Appell F_1", 1,
     "b > 1", dom_b_gt_1_one, eval_cor1uno1, GridKind::one_param},
    {"pibis",
     "single K term over F_D^(3); eight real roots, interval [1/a,a], n=0", 2,
     "1 < a < b", dom_eight_real, eval_pibis, GridKind::eight_real},
    {"piter",
     "two K terms over F_D^(3); eight real roots, interval [b,inf), n=0", 2,
     "1 < a < b", dom_eight_real, eval_piter, GridKind::eight_real},
    {"koro3",
     "one-parameter limit of piter; K(2b/(1+b^2)) over an Appell F_1", 1,
     "b > 1", dom_b_gt_1_one, eval_koro3, GridKind::one_param},
    {"ipcomlunotesi",
     "mixed roots, interval [0,1/b], n=0; complex F_D^(3) arguments", 2,
     "b > 1", dom_b_gt_1_two, eval_ipcomlunotesi, GridKind::mixed},
    {"ipcom2duetesi",
     "mixed roots, interval [b,inf), n=0; complex F_D^(3) arguments", 2,
     "b > 1", dom_b_gt_1_two, eval_ipcom2duetesi, GridKind::mixed},
    {"picomcomeq",
     "all roots on the unit circle, n=0; K over F_D^(4), first parameter 3/2",
     2, "sin a > sin b > 0", dom_sines, eval_picomcomeq, GridKind::circle},
    {"11unoth",
     "two K terms over F_D^(3); eight real roots, interval [0,1/b], n=2", 2,
     "1 < a < b", dom_eight_real, eval_11unoth, GridKind::eight_real},
    {"cor11uno1",
     "one-parameter limit of 11unoth; K(2b/(1+b^2)) over an Appell F_1", 1,
     "b > 1", dom_b_gt_1_one, eval_cor11uno1, GridKind::one_param},
    {"22dueth",
     "eight real roots, interval [1/a,a], n=2; F_D^(3) with b_1 = -1/2", 2,
     "1 < a < b", dom_eight_real, eval_22dueth, GridKind::eight_real},
    {"33treth",
     "two K terms over F_D^(3); eight real roots, interval [b,inf), n=2", 2,
     "1 < a < b", dom_eight_real, eval_33treth, GridKind::eight_real},
    {"33trecorth",
     "one-parameter limit of 33treth; K(2b/(1+b^2)) over an Appell F_1", 1,
     "b > 1", dom_b_gt_1_one, eval_33trecorth, GridKind::one_param},
    {"unobbhyy",
     "mixed roots, interval [0,1/b], n=2; complex F_D^(3) arguments", 2,
     "b > 1", dom_b_gt_1_two, eval_unobbhyy, GridKind::mixed},
    {"ipcom2duetesix",
     "mixed roots, interval [b,inf), n=2; complex F_D^(3) arguments", 2,
     "b > 1", dom_b_gt_1_two, eval_ipcom2duetesix, GridKind::mixed},
    {"picomcomeqb",
     "all roots on the unit circle, n=2; K over F_D^(4), first parameter 1/2",
     2, "sin a > sin b > 0", dom_sines, eval_picomcomeqb, GridKind::circle},
    {"42th",
     "K and E terms over F_D^(3); eight real roots, interval [0,1/b], n=4", 2,
     "1 < a < b", dom_eight_real, eval_42th, GridKind::eight_real},
    {"corth42",
     "one-parameter limit of 42th; K and E over an Appell F_1", 1, "b > 1",
     dom_b_gt_1_one, eval_corth42, GridKind::one_param},
    {"quacinen",
     "eight real roots, interval [1/a,a], n=4; F_D^(3) with b_1 = -3/2", 2,
     "1 < a < b", dom_eight_real, eval_quacinen, GridKind::eight_real},
    {"th46pi",
     "mixed roots, interval [0,1/b], n=4; K and E terms over F_D^(3)", 2,
     "b > 1", dom_b_gt_1_two, eval_th46pi, GridKind::mixed},
};

const IdentityDef& find_def(std::string_view id) {
    for (const auto& def : kCatalog) {
        if (id == def.id) return def;
    }
    throw UnknownIdentity("unknown identity id: " + std::string(id));
}

std::vector<Params> make_grid(GridKind kind) {
    std::vector<Params> grid;
    switch (kind) {
        case GridKind::eight_real:
            for (double a : {1.2, 1.5, 2.0})
                for (double b : {2.5, 3.5, 5.0}) grid.push_back(Params::two(a, b));
            break;
        case GridKind::mixed:
            for (double a : {0.4, 0.7, 1.1})
                for (double b : {1.5, 2.0, 3.0}) grid.push_back(Params::two(a, b));
            break;
        case GridKind::circle:
            for (double a : {0.9, 1.2, 1.5})
                for (double b : {0.2, 0.4, 0.7}) grid.push_back(Params::two(a, b));
            break;
        case GridKind::one_param:
            for (double b : {1.2, 1.5, 2.0, 3.0, 5.0}) grid.push_back(Params::one(b));
            break;
    }
    return grid;
}

} // namespace

std::string to_string(Flag f) {
    switch (f) {
        case Flag::ok: return "ok";
        case Flag::reduced_accuracy: return "reduced_accuracy";
        case Flag::out_of_domain: return "out_of_domain";
    }
    return "?";
}

std::vector<IdentityInfo> list_identities() {
    std::vector<IdentityInfo> out;
    out.reserve(std::size(kCatalog));
    for (const auto& def : kCatalog) {
        out.push_back({def.id, def.description, def.arity, def.domain});
    }
    return out;
}

bool has_identity(std::string_view id) {
    for (const auto& def : kCatalog) {
        if (id == def.id) return true;
    }
    return false;
}

VerificationRecord evaluate_identity(std::string_view id, const Params& params,
                                     double tol) {
    const IdentityDef& def = find_def(id);
    VerificationRecord rec;
    rec.id = def.id;
    rec.params = params;
    if (def.arity == 1 && std::isfinite(params.a)) {
        rec.flag = Flag::out_of_domain;
        rec.note = "identity takes a single parameter b";
        return rec;
    }
    if (!def.in_domain(params)) {
        rec.flag = Flag::out_of_domain;
        rec.note = std::string("outside validity domain (") + def.domain + ")";
        return rec;
    }
    try {
        rec.pi_computed = def.eval(params, tol, rec.route_values);
        rec.residual = std::abs(rec.pi_computed - kPi);
        rec.flag =
            rec.residual < kResidualTolerance ? Flag::ok : Flag::reduced_accuracy;
        if (rec.flag == Flag::reduced_accuracy) {
            rec.note = "residual above tolerance";
        }
    } catch (const ModulusOutOfRange& e) {
        rec.flag = Flag::out_of_domain;
        rec.note = e.what();
    } catch (const BranchCutError& e) {
        rec.flag = Flag::out_of_domain;
        rec.note = e.what();
    }
    return rec;
}

std::vector<VerificationRecord> sweep(std::string_view id,
                                      std::span<const Params> grid,
                                      double tol) {
    find_def(id);  // UnknownIdentity before any work
    std::vector<VerificationRecord> records(grid.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        grid.size() >= 8 ? std::min<unsigned>(hw, static_cast<unsigned>(grid.size())) : 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            records[i] = evaluate_identity(id, grid[i], tol);
        }
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= grid.size()) return;
                records[i] = evaluate_identity(id, grid[i], tol);
            }
        });
    }
    for (auto& t : pool) t.join();
    return records;
}

std::vector<Params> default_grid(std::string_view id) {
    return make_grid(find_def(id).grid);
}

} // namespace hyperpi::catalog
