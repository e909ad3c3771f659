#include "wsspectra/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ws {

bool CrossChecks::ok() const {
    return nu_vs_susy < 1e-12 && susy_telescope < 1e-10 && eps_route < 1e-10 &&
           k_hyperbolic < 1e-8;
}

namespace {

double rel(double x, double y, double floor_scale) {
    return std::abs(x - y) / std::max(floor_scale, std::max(std::abs(x), std::abs(y)));
}

void push_diag(ChannelSolution& s, const std::string& msg) { s.diagnostics.push_back(msg); }

}  // namespace

ChannelSolution solve_channel(const PotentialParams& p, const ChannelSpec& c,
                              const PhysicalConstants& k, const SolveOptions& opt) {
    p.validate();
    c.validate();
    k.validate();

    ChannelSolution sol;
    sol.channel = c;

    if (auto warn = p.diffuseness_warning()) push_diag(sol, *warn);
    const double dt = delta_tilde(p, c, k);
    if (dt < 0.0) push_diag(sol, "delta_tilde < 0: attractive centrifugal term");

    sol.expansion = make_expansion(p, c, k);
    std::optional<NuEnergy> nu;
    if (sol.expansion) {
        if (sol.expansion->k_hyperbolic_dev > 1e-8 && !sol.expansion->bypass)
            push_diag(sol, "expansion coefficient cross-check deviation " +
                               std::to_string(sol.expansion->k_hyperbolic_dev));
        sol.checks.k_hyperbolic = sol.expansion->k_hyperbolic_dev;
        nu = nu_energy(p, c, k, *sol.expansion);
    }
    sol.status = classify(p, c, k, sol.expansion, nu);

    if (nu) {
        sol.energy = nu->energy;
        sol.triple = nu->triple;
        sol.checks.eps_route = rel(nu->energy, nu->energy_eps_route, 1.0);

        if (auto susy = susy_energy(p, c, k, *sol.expansion, c.nr)) {
            sol.checks.nu_vs_susy =
                std::abs(nu->energy - susy->energy) / std::max(1.0, std::abs(nu->energy));
            sol.checks.susy_telescope = rel(susy->energy, susy->telescoped, 1.0);
            if (!susy->recursion_valid)
                push_diag(sol, "shape-invariance recursion outside its validity window");
        }

        if (!nu->triple.principal_branch())
            push_diag(sol,
                      "quantization satisfies epsilon - eta = n'; the (1-z)^eta profile is not "
                      "a solution of the transformed equation");

        sol.wavefunction = make_wavefunction(p, nu->triple, c.nr);
        if (sol.wavefunction) {
            sol.table_norm = flat_norm_const(nu->triple.epsilon, nu->triple.eta, c.nr, p.a);
            const double tail = unphysical_tail(*sol.wavefunction, p);
            std::ostringstream os;
            os << "normalization mass at r < 0: " << tail;
            push_diag(sol, os.str());
        }
    }
    sol.cross_check_ok = sol.checks.ok();

    bool depth_clamped = false;
    depth_condition(p, c, k, &depth_clamped);
    if (depth_clamped) push_diag(sol, "depth condition evaluated with centrifugal strength clamped at 0");

    if (opt.oracle && sol.expansion && !sol.expansion->bypass) {
        sol.oracle = shoot(HamiltonianKind::PekerisApprox, p, c, k, *sol.expansion,
                           opt.oracle_config);
        if (auto exact = shoot(HamiltonianKind::ExactEffective, p, c, k, *sol.expansion,
                               opt.oracle_config))
            sol.oracle_exact_energy = exact->energy;
    }
    return sol;
}

std::vector<ChannelSolution> solve_channels(const PotentialParams& p,
                                            std::vector<ChannelSpec> channels,
                                            const PhysicalConstants& k,
                                            const SolveOptions& opt) {
    std::stable_sort(channels.begin(), channels.end(),
                     [](const ChannelSpec& x, const ChannelSpec& y) {
                         if (x.D != y.D) return x.D < y.D;
                         if (x.l != y.l) return x.l < y.l;
                         return x.nr < y.nr;
                     });
    std::vector<ChannelSolution> out;
    out.reserve(channels.size());
    for (const auto& c : channels) out.push_back(solve_channel(p, c, k, opt));
    return out;
}

}  // namespace ws
