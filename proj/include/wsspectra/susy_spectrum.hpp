#pragma once

#include <optional>
#include <utility>

#include "wsspectra/nu_spectrum.hpp"

namespace ws {

/// Superpotential ansatz W(r) = -(hbar/sqrt(2 mu)) (A + B/(1+e^{(r-R0)/a})).
/// A bound ground state requires A < 0 and B > 0; the constraint system is
///   A^2 = eps0^2/a^2,  2AB - B/a = -beta^2/a^2,  B^2 + B/a = gamma^2/a^2.
struct SuperpotentialParams {
    double A;  // fm^-1
    double B;  // fm^-1
    bool a_negative;  // A < 0
    bool b_positive;  // B > 0
};

/// Empty when the denominator sqrt(1+4 gamma^2) - 1 degenerates (gamma^2 = 0)
/// or the radicand is negative.
std::optional<SuperpotentialParams> superpotential_params(const PotentialParams& p,
                                                          const ChannelSpec& c,
                                                          const PhysicalConstants& k,
                                                          const PekerisExpansion& px);

/// Ground-state energy K0 - (hbar^2/2mu) A^2.
std::optional<double> susy_ground_energy(const PotentialParams& p, const ChannelSpec& c,
                                         const PhysicalConstants& k, const PekerisExpansion& px);

struct SusyEnergy {
    double energy;       // closed form of the shape-invariance recursion
    double telescoped;   // ground energy plus the explicit residue sum
    bool recursion_valid;  // B - nr/a >= 0 along the recursion
};

/// Excited-state energy via both the closed form and the telescoping residue
/// sum; the two must agree to ~1e-10 relative (checked by callers/tests).
/// nr is taken from the argument, not from c.
std::optional<SusyEnergy> susy_energy(const PotentialParams& p, const ChannelSpec& c,
                                      const PhysicalConstants& k, const PekerisExpansion& px,
                                      int nr);

/// W(r) in MeV^(1/2) and its analytic derivative.
double superpotential(double r, const SuperpotentialParams& sp, const PotentialParams& p,
                      const PhysicalConstants& k);
double superpotential_derivative(double r, const SuperpotentialParams& sp,
                                 const PotentialParams& p, const PhysicalConstants& k);

/// Partner potentials
///   V1 = (hbar^2/2mu) [A^2 + (2AB - B/a) z + (B^2 + B/a) z^2],
///   V2 = (hbar^2/2mu) [A^2 + (2AB + B/a) z + (B^2 - B/a) z^2],
/// z = 1/(1+e^{(r-R0)/a}). V1(r) + E0 equals the approximated effective
/// potential; V1(r) -> (hbar^2/2mu) A^2 as r -> infinity.
std::pair<double, double> partner_potentials(double r, const SuperpotentialParams& sp,
                                             const PotentialParams& p,
                                             const PhysicalConstants& k);

/// Shape-invariance residue R(B_i), the r-independent offset between
/// successive partner potentials, evaluated symbolically (difference of the
/// two squared bracket terms).
double shape_invariance_residue(int i, const SuperpotentialParams& sp,
                                const PotentialParams& p, const ChannelSpec& c,
                                const PhysicalConstants& k, const PekerisExpansion& px);

/// Largest nr with B - nr/a > 0; -1 when none. Coincides with the
/// admissibility bound of the closed-form spectrum.
int susy_max_nr(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k,
                const PekerisExpansion& px);

}  // namespace ws
