#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsspectra/numerov.hpp"
#include "wsspectra/susy_spectrum.hpp"
#include "wsspectra/wavefunction.hpp"

namespace ws {

/// Agreement metrics between the independent closed-form routes.
struct CrossChecks {
    double nu_vs_susy = 0.0;       // |E_nu - E_susy| / max(1, |E_nu|), must be < 1e-12
    double susy_telescope = 0.0;   // closed vs telescoped, relative, must be < 1e-10
    double eps_route = 0.0;        // literal vs epsilon-route, relative, must be < 1e-10
    double k_hyperbolic = 0.0;     // C-based vs extremum-substituted K's, must be < 1e-8
    bool ok() const;
};

struct SolveOptions {
    bool oracle = false;              // run the shooting integrator per channel
    ShootingConfig oracle_config{};   // bracket auto-selected when left default
};

/// Everything the pipeline knows about one channel.
struct ChannelSolution {
    ChannelSpec channel;
    std::optional<PekerisExpansion> expansion;
    std::optional<double> energy;                       // MeV, present when evaluable
    Status status = Status::FormulaInvalid;
    std::optional<DimensionlessTriple> triple;
    std::optional<WavefunctionDescriptor> wavefunction;  // radial-measure normalized
    std::optional<double> table_norm;                    // flat-measure rendering constant
    std::optional<OracleResult> oracle;                  // matched-expansion Hamiltonian
    std::optional<double> oracle_exact_energy;           // exact effective Hamiltonian
    CrossChecks checks;
    bool cross_check_ok = true;
    std::vector<std::string> diagnostics;
};

ChannelSolution solve_channel(const PotentialParams& p, const ChannelSpec& c,
                              const PhysicalConstants& k, const SolveOptions& opt = {});

/// Channels evaluated in deterministic (D, l, nr) order.
std::vector<ChannelSolution> solve_channels(const PotentialParams& p,
                                            std::vector<ChannelSpec> channels,
                                            const PhysicalConstants& k,
                                            const SolveOptions& opt = {});

}  // namespace ws
