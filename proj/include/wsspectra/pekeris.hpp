#pragma once

#include <array>
#include <optional>

#include "wsspectra/potential.hpp"

namespace ws {

/// Second-order matched expansion of the centrifugal term in the Woods-Saxon
/// shape, anchored at the effective-potential minimum x_l (x = (r-R0)/R0).
///
/// The approximated effective potential is
///     K0 - K1/(1+e^{(r-R0)/a}) + K2/(1+e^{(r-R0)/a})^2
/// with K0 = dt*C0, K1 = V0 - dt*C1, K2 = dt*C2 and dt = delta_tilde.
///
/// A channel with delta_tilde == 0 has no extremum equation to solve; the
/// expansion degenerates to C = (0,0,0), K = (0, V0, 0) (`bypass` set), which
/// reproduces the bare Woods-Saxon well exactly.
struct PekerisExpansion {
    double x_l;       // extremum, NaN when bypass
    double r_l;       // R0 (1 + x_l), NaN when bypass
    double C0, C1, C2;
    double K0, K1, K2;          // MeV
    double veff_min;            // exact V_eff at r_l, NaN when bypass
    double delta_tilde;         // MeV, cached
    bool bypass = false;        // delta_tilde == 0 channel
    double k_hyperbolic_dev = 0.0;  // cross-check: rel. deviation of the
                                    // extremum-substituted K forms
};

/// Location x_l of the effective-potential minimum, from
///     alpha V0 e^{alpha x} / (1+e^{alpha x})^2 = 2 dt / (1+x)^3.
/// Scans 400 brackets on (-0.999, 5 + 30/alpha], refines by bisection to
/// 1e-14 in x, keeps roots with V_eff'' > 0 and returns the deepest one.
/// Empty when the equation has no solution (monotone effective potential).
std::optional<double> solve_extremum(const PotentialParams& p, const ChannelSpec& c,
                                     const PhysicalConstants& k);

/// Closed-form expansion coefficients at a given anchor x_l > -1.
/// Depends on the well only through alpha = R0/a.
std::array<double, 3> pekeris_coefficients(const PotentialParams& p, double x_l);

struct KCoefficients {
    double K0, K1, K2;          // from the C-based forms
    double hyperbolic_dev;      // rel. deviation vs the extremum-substituted forms;
                                // meaningful only when x_l solves the extremum equation
};

KCoefficients k_coefficients(const PotentialParams& p, double dt, double x_l,
                             double C0, double C1, double C2);

/// Full per-channel construction including the delta_tilde == 0 bypass.
/// Empty result = no extremum (monotone V_eff, or delta_tilde < 0).
std::optional<PekerisExpansion> make_expansion(const PotentialParams& p, const ChannelSpec& c,
                                               const PhysicalConstants& k);

/// K0 - K1 z + K2 z^2 at z = 1/(1+e^{(r-R0)/a}). Total in r.
double approx_effective_potential(double r, const PekerisExpansion& px,
                                  const PotentialParams& p);

/// Residuals of the three matching equations the coefficients must satisfy,
/// each relative to the largest term entering it.
std::array<double, 3> matching_system_residuals(const PotentialParams& p, double x_l,
                                                double C0, double C1, double C2);

}  // namespace ws
