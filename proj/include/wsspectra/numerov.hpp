#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wsspectra/pekeris.hpp"

namespace ws {

enum class HamiltonianKind {
    PekerisApprox,    // the matched-expansion potential K0 - K1 z + K2 z^2
    ExactEffective,   // Woods-Saxon plus the exact centrifugal term
};

struct ShootingConfig {
    double r_min = 1e-6;                  // fm
    double r_max = 0.0;                   // fm; <= 0 means R0 + 25 a
    double step = 0.0;                    // fm; <= 0 means a / 50
    std::pair<double, double> energy_bracket{0.0, 0.0};  // MeV
    double tol_energy = 1e-9;             // MeV
    int max_iter = 200;
    double match_residual_tol = 1e-6;
};

struct OracleResult {
    double energy;             // MeV
    int node_count;            // interior nodes of the matched solution
    double matching_residual;  // normalized log-derivative mismatch at the match point
    bool converged;
};

/// Eigenvalue search by two-sided Numerov integration matched at the
/// outermost classical turning point; the energy is bisected on the sign of
/// the matching Wronskian. The bracket must contain exactly one eigenvalue
/// (use node_count_scan to find one). Empty result = no eigenvalue in the
/// bracket; a result with converged == false did not reach tolerance.
std::optional<OracleResult> shoot(HamiltonianKind kind, const PotentialParams& p,
                                  const ChannelSpec& c, const PhysicalConstants& k,
                                  const PekerisExpansion& px, const ShootingConfig& cfg);

struct EigenvalueBracket {
    std::pair<double, double> bracket;  // MeV
    int node_count;                     // nodes of the eigenvalue inside
};

/// Brackets every eigenvalue in [E_lo, E_hi] by the monotone node count of
/// the outward solution, scanning n_steps energies.
std::vector<EigenvalueBracket> node_count_scan(HamiltonianKind kind, const PotentialParams& p,
                                               const ChannelSpec& c, const PhysicalConstants& k,
                                               const PekerisExpansion& px,
                                               const ShootingConfig& cfg, double E_lo,
                                               double E_hi, int n_steps);

/// Self-test entry: lowest Dirichlet eigenvalue of an arbitrary radial
/// potential on [r_min, r_max] (same integrator, arbitrary V).
std::optional<OracleResult> shoot_potential(const std::function<double(double)>& V,
                                            double hbar2_over_2mu, const ShootingConfig& cfg,
                                            double small_r_exponent = 0.0);

}  // namespace ws
