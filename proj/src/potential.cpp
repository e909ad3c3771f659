#include "wsspectra/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ws {

void PotentialParams::validate() const {
    if (!(V0 > 0.0)) throw std::invalid_argument("V0 must be positive");
    if (!(R0 > 0.0)) throw std::invalid_argument("R0 must be positive");
    if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
}

std::optional<std::string> PotentialParams::diffuseness_warning() const {
    if (a / R0 > 0.3) {
        std::ostringstream os;
        os << "a/R0 = " << a / R0 << " exceeds 0.3; the well is no longer surface-dominated";
        return os.str();
    }
    return std::nullopt;
}

void ChannelSpec::validate() const {
    if (nr < 0) throw std::invalid_argument("nr must be >= 0");
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    if (D < 2) throw std::invalid_argument("D must be >= 2");
}

double delta_tilde(const PotentialParams& p, const ChannelSpec& c, const PhysicalConstants& k) {
    return k.hbar2_over_2mu(p.mu) * c.centrifugal_strength() / (p.R0 * p.R0);
}

double woods_saxon(double r, const PotentialParams& p) {
    return -p.V0 / (1.0 + std::exp((r - p.R0) / p.a));
}

double effective_potential(double r, const PotentialParams& p, const ChannelSpec& c,
                           const PhysicalConstants& k) {
    const double strength = c.centrifugal_strength();
    if (r == 0.0) {
        if (strength != 0.0) throw std::domain_error("centrifugal term singular at r = 0");
        return woods_saxon(0.0, p);
    }
    return woods_saxon(r, p) + k.hbar2_over_2mu(p.mu) * strength / (r * r);
}

std::vector<std::pair<double, double>> potential_curve(const PotentialParams& p,
                                                       const ChannelSpec& c,
                                                       const PhysicalConstants& k,
                                                       double r_min, double r_max, int n) {
    if (!(0.0 < r_min && r_min < r_max)) throw std::invalid_argument("need 0 < r_min < r_max");
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double r = (i == n - 1) ? r_max
                                : r_min + (r_max - r_min) * static_cast<double>(i) / (n - 1);
        out.emplace_back(r, effective_potential(r, p, c, k));
    }
    return out;
}

}  // namespace ws
