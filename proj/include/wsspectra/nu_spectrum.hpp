#pragma once

#include <optional>
#include <string_view>

#include "wsspectra/pekeris.hpp"

namespace ws {

enum class Status {
    Bound,              // admissibility conditions and -V0 < E < 0 all hold
    UnboundEnergyRange, // formula evaluable, energy outside (-V0, 0)
    NoAdmissibleNr,     // channel admits no radial quantum number (or fails the
                        // depth condition); no bound states
    NoExtremum,         // monotone effective potential, no expansion anchor
    FormulaInvalid,     // degenerate/complex closed form
};

/// Serialized names: Bound, Unbound, NoBoundStates, NoExtremum, FormulaInvalid.
std::string_view to_string(Status s);

/// Dimensionless parameters of the transformed radial equation:
///   epsilon^2 = -2 mu a^2 (E - K0) / hbar^2,
///   beta_sq   =  2 mu a^2 K1 / hbar^2,
///   gamma_sq  =  2 mu a^2 K2 / hbar^2,
///   eta       =  sqrt(epsilon^2 - beta_sq + gamma_sq)   (principal root),
///   n_prime   = -nr + (sqrt(1+4 gamma_sq) - 1)/2.
///
/// For quantized energies eta equals |n_prime - epsilon| exactly; eta_signed
/// keeps the sign. eta_signed < 0 (epsilon > n_prime) marks solutions whose
/// (1-z)^{+eta} profile does not satisfy the transformed equation.
struct DimensionlessTriple {
    double epsilon;
    double beta_sq;
    double gamma_sq;
    double eta;         // principal sqrt; NaN when the radicand is negative
    double eta_signed;  // n_prime - epsilon
    double n_prime;

    bool eta_real() const;
    bool principal_branch() const { return eta_signed >= 0.0; }
};

/// Triple for an externally supplied energy. Empty when E >= K0 (epsilon
/// would be imaginary).
std::optional<DimensionlessTriple> dimensionless(const PotentialParams& p, const ChannelSpec& c,
                                                 const PhysicalConstants& k,
                                                 const PekerisExpansion& px, double E);

struct NuEnergy {
    double energy;        // the closed form, implemented term by term
    double energy_eps_route;  // same eigenvalue via epsilon = (n' + (b^2-g^2)/n')/2
    double s;             // sqrt(1+4 gamma_sq) - 2 nr - 1
    DimensionlessTriple triple;
};

/// Closed-form eigenvalue for channel c (nr taken from c). Empty =
/// FormulaInvalid (negative radicand or S <= 0).
std::optional<NuEnergy> nu_energy(const PotentialParams& p, const ChannelSpec& c,
                                  const PhysicalConstants& k, const PekerisExpansion& px);

/// Admissibility: nr < (sqrt(1 + 8 mu a^2 K2 / hbar^2) - 1)/2.
bool admissible_nr(const PotentialParams& p, const PhysicalConstants& k,
                   const PekerisExpansion& px, int nr);

/// Depth condition V0 R0^3 >= 4 hbar^2 l~(l~+1) a / mu, with l~(l~+1)
/// clamped at 0 for the attractive-centrifugal case (clamped flag reported).
bool depth_condition(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k,
                     bool* clamped = nullptr);

/// Largest nr satisfying the strict admissibility inequality; -1 when none.
int max_nr(const PotentialParams& p, const PhysicalConstants& k, const PekerisExpansion& px);

/// Status of a channel given the expansion (when it exists) and the energy
/// (when evaluable). Total over all inputs.
Status classify(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k,
                const std::optional<PekerisExpansion>& px, const std::optional<NuEnergy>& e);

}  // namespace ws
