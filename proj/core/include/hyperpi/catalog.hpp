#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpi/errors.hpp"

namespace hyperpi::catalog {

/// Parameter slot(s) of one identity. Two-parameter identities use (a, b);
/// one-parameter identities use b only and leave a as NaN.
struct Params {
    double a = std::numeric_limits<double>::quiet_NaN();
    double b = std::numeric_limits<double>::quiet_NaN();

    static Params one(double b) { return Params{std::numeric_limits<double>::quiet_NaN(), b}; }
    static Params two(double a, double b) { return Params{a, b}; }
};

enum class Flag { ok, reduced_accuracy, out_of_domain };

std::string to_string(Flag f);

/// One identity evaluation. Every identity has the shape
///   pi = numerator / (den_const + den_coeff * Re F)
/// with the elliptic combination in the numerator and the hypergeometric
/// value F in the denominator; route_values records those pieces.
struct VerificationRecord {
    std::string id;
    Params params;
    double pi_computed = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::string, double>> route_values;
    Flag flag = Flag::out_of_domain;
    std::string note;
};

struct IdentityInfo {
    std::string id;
    std::string description;
    int param_arity = 1;
    std::string domain;
};

/// Residual target every catalog identity is held to.
inline constexpr double kResidualTolerance = 1e-8;

/// The fixed catalog, deterministic order, 20 entries.
std::vector<IdentityInfo> list_identities();

bool has_identity(std::string_view id);

/// Evaluates one identity at one parameter point. Out-of-domain points and
/// propagated validity errors (modulus out of range, branch cut) come back
/// as flagged records, not exceptions. Unknown ids throw UnknownIdentity.
VerificationRecord evaluate_identity(std::string_view id, const Params& params,
                                     double tol = 1e-11);

/// Independent evaluation per grid point (thread-parallel for larger grids);
/// record order always follows grid order.
std::vector<VerificationRecord> sweep(std::string_view id,
                                      std::span<const Params> grid,
                                      double tol = 1e-11);

/// The turnkey verification mesh of an identity (inside its validity
/// region; 9 points for two-parameter identities, 5 for one-parameter).
std::vector<Params> default_grid(std::string_view id);

} // namespace hyperpi::catalog
