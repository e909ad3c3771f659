#include "wsspectra/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ws {

namespace {

constexpr double kRescale = 1e250;

struct Workspace {
    std::vector<double> V;  // MeV on the uniform grid
    double r0 = 0.0;        // fm
    double h = 0.0;         // fm
    double h2 = 0.0;        // hbar^2/2mu, MeV fm^2
    double seed_exponent = 0.0;  // small-r power of the outward seed; 0 = linear

    int n() const { return static_cast<int>(V.size()); }
    double r(int i) const { return r0 + h * i; }
};

Workspace make_workspace(const std::function<double(double)>& V, double hbar2_over_2mu,
                         const ShootingConfig& cfg, double seed_exponent) {
    if (!(cfg.r_min < cfg.r_max)) throw std::invalid_argument("r_min must be < r_max");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("step must be positive");
    Workspace w;
    w.r0 = cfg.r_min;
    const int n = std::max(8, static_cast<int>(std::ceil((cfg.r_max - cfg.r_min) / cfg.step)) + 1);
    w.h = (cfg.r_max - cfg.r_min) / (n - 1);
    w.h2 = hbar2_over_2mu;
    w.seed_exponent = seed_exponent;
    w.V.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w.V[static_cast<size_t>(i)] = V(w.r(i));
    return w;
}

struct Sweep {
    int nodes = 0;
    // solution values at the three points around the requested index
    double um1 = 0.0, u0 = 0.0, up1 = 0.0;
};

Sweep integrate_outward(const Workspace& w, double E, int upto) {
    const double hh12 = w.h * w.h / (12.0 * w.h2);
    Sweep s;
    double u_prev, u_cur;
    if (w.seed_exponent > 0.0) {
        u_prev = std::pow(w.r(0), w.seed_exponent);
        u_cur = std::pow(w.r(1), w.seed_exponent);
    } else {
        u_prev = 0.0;
        u_cur = w.h;
    }
    auto record = [&](int i, double u) {
        if (i == upto - 1) s.um1 = u;
        if (i == upto) s.u0 = u;
        if (i == upto + 1) s.up1 = u;
    };
    record(0, u_prev);
    record(1, u_cur);
    for (int i = 1; i <= upto; ++i) {
        const double fm = w.V[static_cast<size_t>(i - 1)] - E;
        const double fc = w.V[static_cast<size_t>(i)] - E;
        const double fn = w.V[static_cast<size_t>(i + 1)] - E;
        double u_next = ((2.0 + 10.0 * hh12 * fc) * u_cur - (1.0 - hh12 * fm) * u_prev) /
                        (1.0 - hh12 * fn);
        if (u_next * u_cur < 0.0) ++s.nodes;
        if (std::abs(u_next) > kRescale) {
            const double sc = 1.0 / kRescale;
            u_next *= sc;
            u_cur *= sc;
            s.um1 *= sc;
            s.u0 *= sc;
            s.up1 *= sc;
        }
        u_prev = u_cur;
        u_cur = u_next;
        record(i + 1, u_cur);
    }
    return s;
}

Sweep integrate_inward(const Workspace& w, double E, int downto) {
    const double hh12 = w.h * w.h / (12.0 * w.h2);
    Sweep s;
    const int last = w.n() - 1;
    double u_prev = 0.0;       // u(r_max)
    double u_cur = w.h;        // one step inside
    auto record = [&](int i, double u) {
        if (i == downto - 1) s.um1 = u;
        if (i == downto) s.u0 = u;
        if (i == downto + 1) s.up1 = u;
    };
    record(last, u_prev);
    record(last - 1, u_cur);
    for (int i = last - 1; i > downto - 1; --i) {
        const double fp = w.V[static_cast<size_t>(i + 1)] - E;
        const double fc = w.V[static_cast<size_t>(i)] - E;
        const double fm = w.V[static_cast<size_t>(i - 1)] - E;
        double u_next = ((2.0 + 10.0 * hh12 * fc) * u_cur - (1.0 - hh12 * fp) * u_prev) /
                        (1.0 - hh12 * fm);
        if (u_next * u_cur < 0.0) ++s.nodes;
        if (std::abs(u_next) > kRescale) {
            const double sc = 1.0 / kRescale;
            u_next *= sc;
            u_cur *= sc;
            s.um1 *= sc;
            s.u0 *= sc;
            s.up1 *= sc;
        }
        u_prev = u_cur;
        u_cur = u_next;
        record(i - 1, u_cur);
    }
    return s;
}

int full_node_count(const Workspace& w, double E) {
    return integrate_outward(w, E, w.n() - 2).nodes;
}

// Rightmost classically allowed point; fallback to the potential minimum.
int match_index(const Workspace& w, double E) {
    const int n = w.n();
    for (int i = n - 3; i >= 2; --i)
        if (w.V[static_cast<size_t>(i)] <= E) return i;
    int im = 2;
    for (int i = 2; i < n - 2; ++i)
        if (w.V[static_cast<size_t>(i)] < w.V[static_cast<size_t>(im)]) im = i;
    return im;
}

struct Mismatch {
    double wronskian;  // sign flips exactly at eigenvalues
    double residual;   // normalized log-derivative mismatch
};

Mismatch mismatch_at(const Workspace& w, double E, int m) {
    const Sweep out = integrate_outward(w, E, m);
    const Sweep in = integrate_inward(w, E, m);
    const double duo = (out.up1 - out.um1) / (2.0 * w.h);
    const double dui = (in.up1 - in.um1) / (2.0 * w.h);
    // scale both sides to unit magnitude at the match point, keeping signs
    const double so = std::max({std::abs(out.u0), std::abs(out.um1), std::abs(out.up1),
                                std::numeric_limits<double>::min()});
    const double si = std::max({std::abs(in.u0), std::abs(in.um1), std::abs(in.up1),
                                std::numeric_limits<double>::min()});
    const double wr = (duo / so) * (in.u0 / si) - (dui / si) * (out.u0 / so);
    const double denom =
        std::abs(duo / so * in.u0 / si) + std::abs(dui / si * out.u0 / so) +
        std::numeric_limits<double>::min();
    return {wr, std::abs(wr) / denom};
}

int matched_node_count(const Workspace& w, double E, int m) {
    const int n = w.n();
    std::vector<double> uo(static_cast<size_t>(m) + 2), ui;
    // regenerate full profiles for counting; cheap relative to the bisection
    {
        const double hh12 = w.h * w.h / (12.0 * w.h2);
        double u_prev = w.seed_exponent > 0.0 ? std::pow(w.r(0), w.seed_exponent) : 0.0;
        double u_cur = w.seed_exponent > 0.0 ? std::pow(w.r(1), w.seed_exponent) : w.h;
        uo[0] = u_prev;
        uo[1] = u_cur;
        for (int i = 1; i <= m; ++i) {
            const double fm = w.V[static_cast<size_t>(i - 1)] - E;
            const double fc = w.V[static_cast<size_t>(i)] - E;
            const double fn = w.V[static_cast<size_t>(i + 1)] - E;
            double u_next = ((2.0 + 10.0 * hh12 * fc) * u_cur - (1.0 - hh12 * fm) * u_prev) /
                            (1.0 - hh12 * fn);
            if (std::abs(u_next) > kRescale) {
                const double sc = 1.0 / kRescale;
                for (auto& v : uo) v *= sc;
                u_next *= sc;
                u_cur *= sc;
            }
            u_prev = u_cur;
            u_cur = u_next;
            uo[static_cast<size_t>(i) + 1] = u_cur;
        }
        ui.resize(static_cast<size_t>(n - m));
        u_prev = 0.0;
        u_cur = w.h;
        ui[static_cast<size_t>(n - 1 - m)] = u_prev;
        if (n - 2 - m >= 0) ui[static_cast<size_t>(n - 2 - m)] = u_cur;
        for (int i = n - 2; i > m; --i) {
            const double fp = w.V[static_cast<size_t>(i + 1)] - E;
            const double fc = w.V[static_cast<size_t>(i)] - E;
            const double fm = w.V[static_cast<size_t>(i - 1)] - E;
            double u_next = ((2.0 + 10.0 * hh12 * fc) * u_cur - (1.0 - hh12 * fp) * u_prev) /
                            (1.0 - hh12 * fm);
            if (std::abs(u_next) > kRescale) {
                const double sc = 1.0 / kRescale;
                for (auto& v : ui) v *= sc;
                u_next *= sc;
                u_cur *= sc;
            }
            u_prev = u_cur;
            u_cur = u_next;
            ui[static_cast<size_t>(i - 1 - m)] = u_cur;
        }
    }
    // glue with matching sign and count interior sign changes
    const double scale = (ui[0] != 0.0) ? uo[static_cast<size_t>(m)] / ui[0] : 1.0;
    int nodes = 0;
    double prev = uo[1];
    for (int i = 2; i <= m; ++i) {
        const double v = uo[static_cast<size_t>(i)];
        if (v * prev < 0.0) ++nodes;
        if (v != 0.0) prev = v;
    }
    for (int i = 1; i < n - 1 - m; ++i) {
        const double v = scale * ui[static_cast<size_t>(i)];
        if (v * prev < 0.0) ++nodes;
        if (v != 0.0) prev = v;
    }
    return nodes;
}

std::optional<OracleResult> shoot_impl(const Workspace& w, const ShootingConfig& cfg,
                                       int target_nodes) {
    double lo = cfg.energy_bracket.first;
    double hi = cfg.energy_bracket.second;
    if (!(lo < hi)) {
        // auto-bracket: scan the well for the eigenvalue with the target node count
        const double vmin = *std::min_element(w.V.begin(), w.V.end());
        const double top = std::max(0.0, vmin + 1.0);
        double prev_e = vmin + 1e-9;
        int prev_n = full_node_count(w, prev_e);
        bool found = false;
        const int steps = 240;
        for (int i = 1; i <= steps && !found; ++i) {
            const double e = vmin + 1e-9 + (top - vmin) * i / steps;
            const int nn = full_node_count(w, e);
            if (prev_n <= target_nodes && nn > target_nodes) {
                lo = prev_e;
                hi = e;
                found = true;
            }
            prev_e = e;
            prev_n = nn;
        }
        if (!found) return std::nullopt;
    }
    // isolate the eigenvalue by node count
    int nlo = full_node_count(w, lo);
    int nhi = full_node_count(w, hi);
    if (nlo > target_nodes || nhi <= target_nodes) return std::nullopt;
    for (int it = 0; it < cfg.max_iter && nhi - nlo > 1; ++it) {
        const double mid = 0.5 * (lo + hi);
        const int nm = full_node_count(w, mid);
        if (nm > target_nodes) {
            hi = mid;
            nhi = nm;
        } else {
            lo = mid;
            nlo = nm;
        }
    }
    // bisect the log-derivative mismatch at the outermost turning point
    const int m = match_index(w, 0.5 * (lo + hi));
    double wlo = mismatch_at(w, lo, m).wronskian;
    int iter = 0;
    while (hi - lo > cfg.tol_energy && iter++ < cfg.max_iter) {
        const double mid = 0.5 * (lo + hi);
        const double wm = mismatch_at(w, mid, m).wronskian;
        if ((wlo <= 0.0) == (wm <= 0.0)) {
            lo = mid;
            wlo = wm;
        } else {
            hi = mid;
        }
    }
    OracleResult res;
    res.energy = 0.5 * (lo + hi);
    const auto mm = mismatch_at(w, res.energy, m);
    res.matching_residual = mm.residual;
    res.node_count = matched_node_count(w, res.energy, m);
    res.converged = (hi - lo) <= cfg.tol_energy && res.matching_residual < cfg.match_residual_tol;
    return res;
}

ShootingConfig fill_defaults(const PotentialParams& p, ShootingConfig cfg) {
    if (cfg.r_max <= 0.0) cfg.r_max = p.R0 + 25.0 * p.a;
    if (cfg.step <= 0.0) cfg.step = p.a / 50.0;
    return cfg;
}

std::function<double(double)> potential_of(HamiltonianKind kind, const PotentialParams& p,
                                           const ChannelSpec& c, const PhysicalConstants& k,
                                           const PekerisExpansion& px) {
    if (kind == HamiltonianKind::PekerisApprox)
        return [px, p](double r) { return approx_effective_potential(r, px, p); };
    return [p, c, k](double r) { return effective_potential(r, p, c, k); };
}

}  // namespace

std::optional<OracleResult> shoot(HamiltonianKind kind, const PotentialParams& p,
                                  const ChannelSpec& c, const PhysicalConstants& k,
                                  const PekerisExpansion& px, const ShootingConfig& cfg_in) {
    const ShootingConfig cfg = fill_defaults(p, cfg_in);
    const double exponent =
        (kind == HamiltonianKind::ExactEffective && c.centrifugal_strength() != 0.0)
            ? c.l_tilde() + 1.0
            : 0.0;
    const auto w = make_workspace(potential_of(kind, p, c, k, px), k.hbar2_over_2mu(p.mu), cfg,
                                  exponent);
    return shoot_impl(w, cfg, c.nr);
}

std::vector<EigenvalueBracket> node_count_scan(HamiltonianKind kind, const PotentialParams& p,
                                               const ChannelSpec& c, const PhysicalConstants& k,
                                               const PekerisExpansion& px,
                                               const ShootingConfig& cfg_in, double E_lo,
                                               double E_hi, int n_steps) {
    if (!(E_lo < E_hi)) throw std::invalid_argument("need E_lo < E_hi");
    if (n_steps < 1) throw std::invalid_argument("need n_steps >= 1");
    const ShootingConfig cfg = fill_defaults(p, cfg_in);
    const double exponent =
        (kind == HamiltonianKind::ExactEffective && c.centrifugal_strength() != 0.0)
            ? c.l_tilde() + 1.0
            : 0.0;
    const auto w = make_workspace(potential_of(kind, p, c, k, px), k.hbar2_over_2mu(p.mu), cfg,
                                  exponent);
    std::vector<EigenvalueBracket> out;
    double prev_e = E_lo;
    int prev_n = full_node_count(w, E_lo);
    for (int i = 1; i <= n_steps; ++i) {
        const double e = E_lo + (E_hi - E_lo) * i / n_steps;
        const int nn = full_node_count(w, e);
        for (int nc = prev_n; nc < nn; ++nc) out.push_back({{prev_e, e}, nc});
        prev_e = e;
        prev_n = nn;
    }
    return out;
}

std::optional<OracleResult> shoot_potential(const std::function<double(double)>& V,
                                            double hbar2_over_2mu, const ShootingConfig& cfg,
                                            double small_r_exponent) {
    if (cfg.r_max <= 0.0 || cfg.step <= 0.0)
        throw std::invalid_argument("shoot_potential requires explicit r_max and step");
    const auto w = make_workspace(V, hbar2_over_2mu, cfg, small_r_exponent);
    return shoot_impl(w, cfg, 0);
}

}  // namespace ws
