#include "wsspectra/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

namespace ws {

double z_of_r(double r, const PotentialParams& p) {
    return 1.0 / (1.0 + std::exp((r - p.R0) / p.a));
}

double r_of_z(double z, const PotentialParams& p) {
    if (!(0.0 < z && z < 1.0)) throw std::domain_error("z must lie in (0,1)");
    return p.R0 + p.a * std::log((1.0 - z) / z);
}

double jacobi_polynomial(int n, double alpha, double beta, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_polynomial: n must be >= 0");
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double pm0 = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
    for (int m = 2; m <= n; ++m) {
        const double ab = alpha + beta;
        const double c1 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
        const double c2 = (2.0 * m + ab - 1.0) *
                          ((2.0 * m + ab) * (2.0 * m + ab - 2.0) * x + alpha * alpha -
                           beta * beta);
        const double c3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * (2.0 * m + ab);
        const double p = (c2 * pm0 - c3 * pm1) / c1;
        pm1 = pm0;
        pm0 = p;
    }
    return pm0;
}

std::vector<double> jacobi_z_coefficients(int n, double alpha, double beta) {
    if (n < 0) throw std::invalid_argument("jacobi_z_coefficients: n must be >= 0");
    std::vector<double> c(static_cast<size_t>(n) + 1);
    double c0 = 1.0;
    for (int j = 1; j <= n; ++j) c0 *= (alpha + j) / j;
    c[0] = c0;
    for (int m = 0; m < n; ++m)
        c[m + 1] = c[m] * (m - n) * (n + alpha + beta + 1.0 + m) /
                   ((alpha + 1.0 + m) * (m + 1.0));
    return c;
}

namespace {

// Coefficients of [P_nr^{(2eps,2eta)}(1-2z)]^2 as a polynomial in z.
std::vector<double> squared_poly_coefficients(int nr, double eps, double eta) {
    auto c = jacobi_z_coefficients(nr, 2.0 * eps, 2.0 * eta);
    std::vector<double> q(2 * c.size() - 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) q[i + j] += c[i] * c[j];
    return q;
}

double log_beta(double x, double y) { return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y); }

// sum_m q_m * B(x0 + m, y), evaluated through the Beta ratio recurrence.
double beta_series(const std::vector<double>& q, double x0, double y) {
    double b = std::exp(log_beta(x0, y));
    double total = 0.0;
    for (size_t m = 0; m < q.size(); ++m) {
        total += q[m] * b;
        b *= (x0 + static_cast<double>(m)) / (x0 + y + static_cast<double>(m));
    }
    return total;
}

}  // namespace

double normalize(double eps, double eta, int nr, double a) {
    if (!(eps > 0.0) || !(eta > 0.0))
        throw std::domain_error("normalization integral diverges unless eps > 0 and eta > 0");
    const double integral = beta_series(squared_poly_coefficients(nr, eps, eta), 2.0 * eps,
                                        2.0 * eta);
    return 1.0 / std::sqrt(a * integral);
}

double flat_norm_const(double eps, double eta, int nr, double a) {
    if (!(eps > -0.5) || !(eta > -0.5))
        throw std::domain_error("flat-measure integral diverges");
    const double integral = beta_series(squared_poly_coefficients(nr, eps, eta),
                                        2.0 * eps + 1.0, 2.0 * eta + 1.0);
    return 1.0 / std::sqrt(a * integral);
}

std::optional<WavefunctionDescriptor> make_wavefunction(const PotentialParams& p,
                                                        const DimensionlessTriple& t, int nr) {
    if (!(t.epsilon > 0.0) || !t.eta_real() || !(t.eta > 0.0)) return std::nullopt;
    WavefunctionDescriptor w;
    w.epsilon = t.epsilon;
    w.eta = t.eta;
    w.nr = nr;
    w.a = p.a;
    w.norm_const = normalize(t.epsilon, t.eta, nr, p.a);
    return w;
}

double evaluate(double z, const WavefunctionDescriptor& w) {
    if (!(0.0 <= z && z <= 1.0)) throw std::domain_error("z must lie in [0,1]");
    if (z == 0.0 || z == 1.0) return 0.0;
    return w.norm_const * std::pow(z, w.epsilon) * std::pow(1.0 - z, w.eta) *
           jacobi_polynomial(w.nr, 2.0 * w.epsilon, 2.0 * w.eta, 1.0 - 2.0 * z);
}

RadialCurve sample_curve(const WavefunctionDescriptor& w, int n, RadialCurve::Coordinate coord,
                         const PotentialParams& p) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    RadialCurve out;
    out.coordinate = coord;
    out.samples.reserve(static_cast<size_t>(n));
    if (coord == RadialCurve::Coordinate::Z) {
        for (int i = 0; i < n; ++i) {
            const double z = (i == n - 1) ? 1.0 : static_cast<double>(i) / (n - 1);
            out.samples.emplace_back(z, evaluate(z, w));
        }
    } else {
        const double r_max = p.R0 + 20.0 * p.a;
        for (int i = 0; i < n; ++i) {
            const double r = (i == n - 1) ? r_max : r_max * static_cast<double>(i) / (n - 1);
            out.samples.emplace_back(r, evaluate(z_of_r(r, p), w));
        }
    }
    return out;
}

double unphysical_tail(const WavefunctionDescriptor& w, const PotentialParams& p) {
    const double z0 = z_of_r(0.0, p);
    const double w0 = 1.0 - z0;  // width of the unphysical sliver at z -> 1
    if (w0 <= 0.0) return 0.0;
    // xi = ((1-z)/w0)^{2 eta} absorbs the endpoint factor exactly:
    // integral = w0^{2 eta}/(2 eta) * Int_0^1 g(z(xi)) dxi with smooth g.
    const double two_eta = 2.0 * w.eta;
    auto g = [&](double one_minus_z) {
        const double z = 1.0 - one_minus_z;
        const double pol = jacobi_polynomial(w.nr, 2.0 * w.epsilon, two_eta, 1.0 - 2.0 * z);
        return std::pow(z, 2.0 * w.epsilon - 1.0) * pol * pol;
    };
    const int n = 200;  // composite Simpson in xi
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double xi = static_cast<double>(i) / n;
        const double omz = w0 * std::pow(xi, 1.0 / two_eta);
        const double f = g(omz);
        sum += (i == 0 || i == n) ? f : (i % 2 == 1 ? 4.0 * f : 2.0 * f);
    }
    const double integral = std::pow(w0, two_eta) / two_eta * sum / (3.0 * n);
    return w.a * w.norm_const * w.norm_const * integral;
}

}  // namespace ws
