#include "wsspectra/pekeris.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ws {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Derivative of the effective potential in x = (r-R0)/R0; roots are extrema.
double extremum_fn(double x, double alpha, double V0, double dt) {
    const double t = std::exp(alpha * x);
    const double s = 1.0 + t;
    return alpha * V0 * t / (s * s) - 2.0 * dt / ((1.0 + x) * (1.0 + x) * (1.0 + x));
}

// Second derivative of the effective potential in x.
double veff_second_derivative(double x, double alpha, double V0, double dt) {
    const double t = std::exp(alpha * x);
    const double s = 1.0 + t;
    const double om = 1.0 + x;
    return alpha * alpha * V0 * t * (1.0 - t) / (s * s * s) + 6.0 * dt / (om * om * om * om);
}

double veff_of_x(double x, const PotentialParams& p, double dt) {
    const double t = std::exp(p.alpha() * x);
    return -p.V0 / (1.0 + t) + dt / ((1.0 + x) * (1.0 + x));
}

double bisect_root(double lo, double hi, double flo, double alpha, double V0, double dt) {
    for (int i = 0; i < 60 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = extremum_fn(mid, alpha, V0, dt);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> bracket_roots(double alpha, double V0, double dt, double x_lo, double x_hi,
                                  int n) {
    std::vector<double> roots;
    double xp = x_lo;
    double fp = extremum_fn(xp, alpha, V0, dt);
    for (int i = 1; i <= n; ++i) {
        // denser sampling toward the centrifugal singularity at x = -1
        const double u = static_cast<double>(i) / n;
        const double x = x_lo + (x_hi - x_lo) * u * std::sqrt(u);
        const double f = extremum_fn(x, alpha, V0, dt);
        if ((fp <= 0.0) != (f <= 0.0)) roots.push_back(bisect_root(xp, x, fp, alpha, V0, dt));
        xp = x;
        fp = f;
    }
    return roots;
}

}  // namespace

std::optional<double> solve_extremum(const PotentialParams& p, const ChannelSpec& c,
                                     const PhysicalConstants& k) {
    const double dt = delta_tilde(p, c, k);
    if (dt <= 0.0) return std::nullopt;  // no solution; dt = 0 is handled by make_expansion
    const double alpha = p.alpha();
    const double x_hi = 5.0 + 30.0 / alpha;
    auto roots = bracket_roots(alpha, p.V0, dt, -0.999, x_hi, 400);
    if (roots.empty()) {
        // near-tangent pair: rescan around the maximum of the derivative
        double xm = -0.999, fm = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 400; ++i) {
            const double x = -0.999 + (x_hi + 0.999) * i / 400.0;
            const double f = extremum_fn(x, alpha, p.V0, dt);
            if (f > fm) {
                fm = f;
                xm = x;
            }
        }
        const double w = (x_hi + 0.999) / 400.0;
        roots = bracket_roots(alpha, p.V0, dt, std::max(-0.999, xm - w), xm + w, 200);
        if (roots.empty()) return std::nullopt;
    }
    std::optional<double> best;
    for (double x : roots) {
        if (veff_second_derivative(x, alpha, p.V0, dt) <= 0.0) continue;
        if (!best || veff_of_x(x, p, dt) < veff_of_x(*best, p, dt)) best = x;
    }
    return best;
}

std::array<double, 3> pekeris_coefficients(const PotentialParams& p, double x_l) {
    const double alpha = p.alpha();
    const double t = std::exp(alpha * x_l);
    const double s = 1.0 + t;
    const double em = std::exp(-alpha * x_l);
    const double om = 1.0 + x_l;
    const double om3 = om * om * om;
    const double C0 = 1.0 / (om * om) +
                      s * s / (alpha * t * om3) * ((em - 3.0) / s + 3.0 * em / (alpha * om));
    const double C1 =
        2.0 * s * s / (alpha * t * om3) * (2.0 - em - 3.0 * (1.0 + em) / (alpha * om));
    const double C2 =
        s * s * s / (alpha * t * om3) * (em - 1.0 + 3.0 * (1.0 + em) / (alpha * om));
    return {C0, C1, C2};
}

KCoefficients k_coefficients(const PotentialParams& p, double dt, double x_l, double C0,
                             double C1, double C2) {
    KCoefficients out;
    out.K0 = dt * C0;
    out.K1 = p.V0 - dt * C1;
    out.K2 = dt * C2;

    // Extremum-substituted forms; they coincide with the C-based ones exactly
    // when x_l solves the extremum equation.
    const double alpha = p.alpha();
    const double em = std::exp(-alpha * x_l);
    const double s = 1.0 + std::exp(alpha * x_l);
    const double om = 1.0 + x_l;
    const double ch2 = std::cosh(0.5 * alpha * x_l) * std::cosh(0.5 * alpha * x_l);
    const double K0h = 0.5 * p.V0 *
                       (alpha * om / (4.0 * ch2) + (em - 3.0) / s + 3.0 * em / (alpha * om));
    const double K1h = p.V0 * (em - 1.0 + 3.0 * (1.0 + em) / (alpha * om));
    const double K2h = p.V0 * (6.0 * ch2 / (alpha * om) - std::sinh(alpha * x_l));

    const double scale = std::max({std::abs(out.K0), std::abs(out.K1), std::abs(out.K2), 1.0});
    out.hyperbolic_dev = std::max({std::abs(out.K0 - K0h), std::abs(out.K1 - K1h),
                                   std::abs(out.K2 - K2h)}) /
                         scale;
    return out;
}

std::optional<PekerisExpansion> make_expansion(const PotentialParams& p, const ChannelSpec& c,
                                               const PhysicalConstants& k) {
    const double dt = delta_tilde(p, c, k);
    if (dt == 0.0) {
        PekerisExpansion px;
        px.x_l = kNaN;
        px.r_l = kNaN;
        px.C0 = px.C1 = px.C2 = 0.0;
        px.K0 = 0.0;
        px.K1 = p.V0;
        px.K2 = 0.0;
        px.veff_min = kNaN;
        px.delta_tilde = 0.0;
        px.bypass = true;
        return px;
    }
    auto x_l = solve_extremum(p, c, k);
    if (!x_l) return std::nullopt;
    PekerisExpansion px;
    px.x_l = *x_l;
    px.r_l = p.R0 * (1.0 + *x_l);
    auto [C0, C1, C2] = pekeris_coefficients(p, *x_l);
    px.C0 = C0;
    px.C1 = C1;
    px.C2 = C2;
    auto kc = k_coefficients(p, dt, *x_l, C0, C1, C2);
    px.K0 = kc.K0;
    px.K1 = kc.K1;
    px.K2 = kc.K2;
    px.k_hyperbolic_dev = kc.hyperbolic_dev;
    px.veff_min = veff_of_x(*x_l, p, dt);
    px.delta_tilde = dt;
    return px;
}

double approx_effective_potential(double r, const PekerisExpansion& px,
                                  const PotentialParams& p) {
    const double z = 1.0 / (1.0 + std::exp((r - p.R0) / p.a));
    return px.K0 - px.K1 * z + px.K2 * z * z;
}

std::array<double, 3> matching_system_residuals(const PotentialParams& p, double x_l, double C0,
                                                double C1, double C2) {
    const double alpha = p.alpha();
    const double t = std::exp(alpha * x_l);
    const double s = 1.0 + t;
    const double om = 1.0 + x_l;

    const double a1 = C0, b1 = C1 / s, c1 = C2 / (s * s), d1 = 1.0 / (om * om);
    const double r1 = (a1 + b1 + c1 - d1) /
                      std::max({std::abs(a1), std::abs(b1), std::abs(c1), std::abs(d1)});

    const double a2 = alpha * C1 * t / (s * s), b2 = 2.0 * alpha * C2 * t / (s * s * s),
                 d2 = 2.0 / (om * om * om);
    const double r2 = (a2 + b2 - d2) / std::max({std::abs(a2), std::abs(b2), std::abs(d2)});

    const double a3 = alpha * alpha * C1 * t * (1.0 - t) / (2.0 * s * s * s),
                 b3 = alpha * alpha * C2 * t * (1.0 - 2.0 * t) / (s * s * s * s),
                 d3 = -3.0 / (om * om * om * om);
    const double r3 = (a3 + b3 - d3) / std::max({std::abs(a3), std::abs(b3), std::abs(d3)});

    return {r1, r2, r3};
}

}  // namespace ws
