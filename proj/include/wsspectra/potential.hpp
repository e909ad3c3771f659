#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsspectra/constants.hpp"

namespace ws {

/// Woods-Saxon well parameters. Energies in MeV, lengths in fm, masses in u.
struct PotentialParams {
    double V0;  // depth, > 0
    double R0;  // radius, > 0
    double a;   // surface diffuseness, > 0
    double mu;  // reduced mass, > 0

    double alpha() const { return R0 / a; }

    void validate() const;  // throws std::invalid_argument on violated bounds

    /// Advisory only: the well shape assumes a << R0.
    std::optional<std::string> diffuseness_warning() const;
};

/// Quantum numbers of a single channel. l_tilde = l + (D-3)/2 carries the
/// dimension; channels with equal l_tilde are physically identical.
struct ChannelSpec {
    int nr;  // radial quantum number, >= 0
    int l;   // orbital quantum number, >= 0
    int D;   // dimension, >= 2

    double l_tilde() const { return l + 0.5 * (D - 3); }
    double centrifugal_strength() const { return l_tilde() * (l_tilde() + 1.0); }

    void validate() const;
};

/// hbar^2 l~(l~+1) / (2 mu R0^2), MeV. Negative for D=2, l=0.
double delta_tilde(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k);

/// -V0 / (1 + e^{(r-R0)/a}). Strictly increasing in r, range (-V0, 0).
double woods_saxon(double r, const PotentialParams& p);

/// woods_saxon(r) + hbar^2 l~(l~+1) / (2 mu r^2).
/// r = 0 with a nonzero centrifugal term is a domain error.
double effective_potential(double r, const PotentialParams& p, const ChannelSpec& c,
                           const PhysicalConstants& k);

/// n uniform samples of (r, V_eff) on [r_min, r_max], endpoints exact.
std::vector<std::pair<double, double>> potential_curve(const PotentialParams& p,
                                                       const ChannelSpec& c,
                                                       const PhysicalConstants& k,
                                                       double r_min, double r_max, int n);

}  // namespace ws
