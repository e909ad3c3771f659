#include "wsspectra/susy_spectrum.hpp"

#include <cmath>

namespace ws {

namespace {

double energy_scale(const PotentialParams& p, const PhysicalConstants& k) {
    return p.a * p.a / k.hbar2_over_2mu(p.mu);
}

// Bracket of the closed-form recursion: g(b) = (gamma^2-beta^2)/(2 a^2 b) - b/2.
// g(B) = A, and the whole spectrum is K0 - (hbar^2/2mu) g(B - nr/a)^2.
double residue_bracket(double b, double beta_sq, double gamma_sq, double a) {
    return (gamma_sq - beta_sq) / (2.0 * a * a * b) - 0.5 * b;
}

}  // namespace

std::optional<SuperpotentialParams> superpotential_params(const PotentialParams& p,
                                                          const ChannelSpec& c,
                                                          const PhysicalConstants& k,
                                                          const PekerisExpansion& px) {
    (void)c;
    const double sc = energy_scale(p, k);
    const double beta_sq = sc * px.K1;
    const double gamma_sq = sc * px.K2;
    const double rad = 1.0 + 4.0 * gamma_sq;
    if (rad < 0.0) return std::nullopt;
    const double q = std::sqrt(rad);
    if (q == 1.0) return std::nullopt;  // degenerate denominator (gamma^2 = 0)
    SuperpotentialParams sp;
    sp.A = 1.0 / (2.0 * p.a) - beta_sq / (p.a * (q - 1.0));
    sp.B = (q - 1.0) / (2.0 * p.a);
    sp.a_negative = sp.A < 0.0;
    sp.b_positive = sp.B > 0.0;
    return sp;
}

std::optional<double> susy_ground_energy(const PotentialParams& p, const ChannelSpec& c,
                                         const PhysicalConstants& k,
                                         const PekerisExpansion& px) {
    auto sp = superpotential_params(p, c, k, px);
    if (!sp) return std::nullopt;
    return px.K0 - k.hbar2_over_2mu(p.mu) * sp->A * sp->A;
}

std::optional<SusyEnergy> susy_energy(const PotentialParams& p, const ChannelSpec& c,
                                      const PhysicalConstants& k, const PekerisExpansion& px,
                                      int nr) {
    const double sc = energy_scale(p, k);
    const double beta_sq = sc * px.K1;
    const double gamma_sq = sc * px.K2;
    const double rad = 1.0 + 4.0 * gamma_sq;
    if (rad < 0.0) return std::nullopt;
    const double q = std::sqrt(rad);
    const double S = q - 2.0 * nr - 1.0;
    if (S == 0.0 || q == 1.0) return std::nullopt;

    const double h2 = k.hbar2_over_2mu(p.mu);
    SusyEnergy out;
    const double bracket = (beta_sq - gamma_sq) / S + 0.25 * S;
    out.energy = px.K0 - h2 / (p.a * p.a) * bracket * bracket;

    const double B = (q - 1.0) / (2.0 * p.a);
    out.recursion_valid = B - nr / p.a >= 0.0;

    auto e0 = susy_ground_energy(p, c, k, px);
    if (!e0) return std::nullopt;
    double sum = *e0;
    for (int i = 1; i <= nr; ++i) {
        const double gi = residue_bracket(B - i / p.a, beta_sq, gamma_sq, p.a);
        const double gim1 = residue_bracket(B - (i - 1) / p.a, beta_sq, gamma_sq, p.a);
        sum += -h2 * (gi * gi - gim1 * gim1);
    }
    out.telescoped = sum;
    return out;
}

double superpotential(double r, const SuperpotentialParams& sp, const PotentialParams& p,
                      const PhysicalConstants& k) {
    const double z = 1.0 / (1.0 + std::exp((r - p.R0) / p.a));
    return -std::sqrt(k.hbar2_over_2mu(p.mu)) * (sp.A + sp.B * z);
}

double superpotential_derivative(double r, const SuperpotentialParams& sp,
                                 const PotentialParams& p, const PhysicalConstants& k) {
    const double z = 1.0 / (1.0 + std::exp((r - p.R0) / p.a));
    return std::sqrt(k.hbar2_over_2mu(p.mu)) * sp.B / p.a * z * (1.0 - z);
}

std::pair<double, double> partner_potentials(double r, const SuperpotentialParams& sp,
                                             const PotentialParams& p,
                                             const PhysicalConstants& k) {
    const double h2 = k.hbar2_over_2mu(p.mu);
    const double z = 1.0 / (1.0 + std::exp((r - p.R0) / p.a));
    const double a = p.a;
    const double v1 = h2 * (sp.A * sp.A + (2.0 * sp.A * sp.B - sp.B / a) * z +
                            (sp.B * sp.B + sp.B / a) * z * z);
    const double v2 = h2 * (sp.A * sp.A + (2.0 * sp.A * sp.B + sp.B / a) * z +
                            (sp.B * sp.B - sp.B / a) * z * z);
    return {v1, v2};
}

double shape_invariance_residue(int i, const SuperpotentialParams& sp, const PotentialParams& p,
                                const ChannelSpec& c, const PhysicalConstants& k,
                                const PekerisExpansion& px) {
    (void)c;
    const double sc = energy_scale(p, k);
    const double beta_sq = sc * px.K1;
    const double gamma_sq = sc * px.K2;
    const double gi = residue_bracket(sp.B - i / p.a, beta_sq, gamma_sq, p.a);
    const double gim1 = residue_bracket(sp.B - (i - 1) / p.a, beta_sq, gamma_sq, p.a);
    return -k.hbar2_over_2mu(p.mu) * (gi * gi - gim1 * gim1);
}

int susy_max_nr(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k,
                const PekerisExpansion& px) {
    auto sp = superpotential_params(p, c, k, px);
    if (!sp) return -1;
    const double bound = sp->B * p.a;  // nr < a B
    if (bound <= 0.0) return -1;
    int n = static_cast<int>(std::floor(bound));
    if (static_cast<double>(n) == bound) --n;
    return n;
}

}  // namespace ws
