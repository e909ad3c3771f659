#include "wsspectra/nu_spectrum.hpp"

#include <cmath>
#include <limits>

namespace ws {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Bound: return "Bound";
        case Status::UnboundEnergyRange: return "Unbound";
        case Status::NoAdmissibleNr: return "NoBoundStates";
        case Status::NoExtremum: return "NoExtremum";
        case Status::FormulaInvalid: return "FormulaInvalid";
    }
    return "FormulaInvalid";
}

bool DimensionlessTriple::eta_real() const { return !std::isnan(eta); }

namespace {

// 2 mu a^2 / hbar^2 in MeV^-1, the scale converting energies to the
// dimensionless parameters.
double energy_scale(const PotentialParams& p, const PhysicalConstants& k) {
    return p.a * p.a / k.hbar2_over_2mu(p.mu);
}

}  // namespace

std::optional<DimensionlessTriple> dimensionless(const PotentialParams& p, const ChannelSpec& c,
                                                 const PhysicalConstants& k,
                                                 const PekerisExpansion& px, double E) {
    const double sc = energy_scale(p, k);
    if (E >= px.K0) return std::nullopt;  // epsilon imaginary
    DimensionlessTriple t;
    t.epsilon = std::sqrt(sc * (px.K0 - E));
    t.beta_sq = sc * px.K1;
    t.gamma_sq = sc * px.K2;
    const double rad = 1.0 + 4.0 * t.gamma_sq;
    t.n_prime = rad >= 0.0 ? -c.nr + 0.5 * (std::sqrt(rad) - 1.0)
                           : std::numeric_limits<double>::quiet_NaN();
    const double eta_rad = t.epsilon * t.epsilon - t.beta_sq + t.gamma_sq;
    t.eta = eta_rad >= 0.0 ? std::sqrt(eta_rad) : std::numeric_limits<double>::quiet_NaN();
    t.eta_signed = t.n_prime - t.epsilon;
    return t;
}

std::optional<NuEnergy> nu_energy(const PotentialParams& p, const ChannelSpec& c,
                                  const PhysicalConstants& k, const PekerisExpansion& px) {
    const double sc = energy_scale(p, k);
    const double gamma_sq = sc * px.K2;
    const double beta_sq = sc * px.K1;
    const double rad = 1.0 + 4.0 * gamma_sq;
    if (rad < 0.0) return std::nullopt;
    const double S = std::sqrt(rad) - 2.0 * c.nr - 1.0;
    if (S <= 0.0) return std::nullopt;

    NuEnergy out;
    out.s = S;
    const double h2 = k.hbar2_over_2mu(p.mu);
    const double dk = px.K1 - px.K2;
    // closed form, term by term
    out.energy = px.K0 - 0.5 * dk - h2 * S * S / (16.0 * p.a * p.a) - sc * dk * dk / (S * S);

    // independent route through the quantized epsilon
    const double n_prime = 0.5 * S;
    const double eps = 0.5 * (n_prime + (beta_sq - gamma_sq) / n_prime);
    out.energy_eps_route = px.K0 - h2 * eps * eps / (p.a * p.a);

    DimensionlessTriple t;
    t.epsilon = eps;
    t.beta_sq = beta_sq;
    t.gamma_sq = gamma_sq;
    t.n_prime = n_prime;
    const double eta_rad = eps * eps - beta_sq + gamma_sq;
    // exactly (n' - eps)^2 for quantized energies; clamp roundoff
    t.eta = std::sqrt(std::max(eta_rad, 0.0));
    t.eta_signed = n_prime - eps;
    out.triple = t;
    return out;
}

bool admissible_nr(const PotentialParams& p, const PhysicalConstants& k,
                   const PekerisExpansion& px, int nr) {
    const double gamma_sq = energy_scale(p, k) * px.K2;
    const double rad = 1.0 + 4.0 * gamma_sq;
    if (rad < 0.0) return false;
    return nr < 0.5 * (std::sqrt(rad) - 1.0);
}

bool depth_condition(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k,
                     bool* clamped) {
    double strength = c.centrifugal_strength();
    if (clamped) *clamped = false;
    if (strength < 0.0) {
        strength = 0.0;
        if (clamped) *clamped = true;
    }
    const double lhs = p.V0 * p.R0 * p.R0 * p.R0;
    const double rhs = 8.0 * k.hbar2_over_2mu(p.mu) * strength * p.a;
    return lhs >= rhs;
}

int max_nr(const PotentialParams& p, const PhysicalConstants& k, const PekerisExpansion& px) {
    const double gamma_sq = energy_scale(p, k) * px.K2;
    const double rad = 1.0 + 4.0 * gamma_sq;
    if (rad < 0.0) return -1;
    const double bound = 0.5 * (std::sqrt(rad) - 1.0);
    if (bound <= 0.0) return -1;
    int n = static_cast<int>(std::floor(bound));
    if (static_cast<double>(n) == bound) --n;  // strict inequality
    return n;
}

Status classify(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k,
                const std::optional<PekerisExpansion>& px, const std::optional<NuEnergy>& e) {
    if (!px) return Status::NoExtremum;
    const double gamma_sq = energy_scale(p, k) * px->K2;
    if (1.0 + 4.0 * gamma_sq < 0.0) return Status::FormulaInvalid;
    if (max_nr(p, k, *px) < 0) return Status::NoAdmissibleNr;
    if (!e) return Status::FormulaInvalid;  // S <= 0 for this nr
    const double E = e->energy;
    if (!(-p.V0 < E && E < 0.0)) return Status::UnboundEnergyRange;
    const bool wf_ok = e->triple.epsilon > 0.0 && e->triple.eta_real() && e->triple.eta > 0.0;
    if (admissible_nr(p, k, *px, c.nr) && depth_condition(p, c, k) && wf_ok)
        return Status::Bound;
    return Status::NoAdmissibleNr;
}

}  // namespace ws
