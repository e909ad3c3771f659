#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wsspectra/nu_spectrum.hpp"

namespace ws {

/// z = 1/(1+e^{(r-R0)/a}); strictly decreasing, z(R0) = 1/2, z(inf) = 0.
double z_of_r(double r, const PotentialParams& p);
double r_of_z(double z, const PotentialParams& p);

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the three-term recurrence.
double jacobi_polynomial(int n, double alpha, double beta, double x);

/// Coefficients c_k of P_n^{(alpha,beta)}(1-2z) = sum_k c_k z^k.
std::vector<double> jacobi_z_coefficients(int n, double alpha, double beta);

/// Radial profile u(z) = C z^eps (1-z)^eta P_nr^{(2 eps, 2 eta)}(1-2z),
/// normalized with the radial measure:  a * Int_0^1 |u|^2 / (z(1-z)) dz = 1.
struct WavefunctionDescriptor {
    double epsilon;     // > 0
    double eta;         // > 0
    int nr;
    double norm_const;  // radial-measure constant C
    double a;           // fm, diffuseness carried for the measure
};

/// Radial-measure normalization constant (analytic: termwise Beta integrals
/// of the squared polynomial). Throws std::domain_error when eps <= 0 or
/// eta <= 0 (divergent integral).
double normalize(double eps, double eta, int nr, double a);

/// Flat-measure constant, a * Int_0^1 |u|^2 dz = 1 — the convention of the
/// published tables; reduces to 1/sqrt(a B(2eps+1, 2eta+1)) at nr = 0.
double flat_norm_const(double eps, double eta, int nr, double a);

/// Descriptor for a quantized channel; empty unless eps > 0 and eta > 0.
std::optional<WavefunctionDescriptor> make_wavefunction(const PotentialParams& p,
                                                        const DimensionlessTriple& t, int nr);

/// u(z); 0^positive = 0 at the endpoints.
double evaluate(double z, const WavefunctionDescriptor& w);

struct RadialCurve {
    enum class Coordinate { Z, R };
    Coordinate coordinate;
    std::vector<std::pair<double, double>> samples;  // (z or r, u)
};

/// n uniform samples; z-domain [0,1], r-domain [0, R0+20a].
RadialCurve sample_curve(const WavefunctionDescriptor& w, int n,
                         RadialCurve::Coordinate coord, const PotentialParams& p);

/// Probability mass the z in [0,1] normalization assigns to r < 0, i.e.
/// a * Int_{z(0)}^1 |u|^2/(z(1-z)) dz. Diagnostic, O(e^{-alpha}) nominally.
double unphysical_tail(const WavefunctionDescriptor& w, const PotentialParams& p);

}  // namespace ws
