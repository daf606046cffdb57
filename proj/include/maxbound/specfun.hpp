#pragma once

#include <complex>

namespace maxbound::specfun {

/// Gamma function for x > 0. Relative error <= 1e-12 on (0, 50], checked
/// against the reflection and duplication identities.
double gamma(double x);

/// log(Gamma(x)) for x > 0; safe for ratio evaluation at large arguments.
double log_gamma(double x);

/// Gamma on the complex plane (principal values; poles map to inf/nan).
std::complex<double> gamma(std::complex<double> z);

/// Reciprocal gamma 1/Gamma(z); entire, zero at the poles of Gamma.
std::complex<double> rgamma(std::complex<double> z);

/// Bessel order restricted to the half-integers nu >= -1/2 that arise as
/// (N-2)/2 and N/2 for N >= 1.
struct BesselOrder {
    explicit BesselOrder(double nu);
    double nu;
};

/// Power-series evaluation of J_nu(x). Valid for x <= 30 where the
/// alternating sum keeps significance (accumulated in double-double
/// internally); larger x raises RangeError pointing at the other routes.
double bessel_j_series(BesselOrder order, double x);

/// Poisson integral representation of J_nu(x), nu > -1/2, by adaptive
/// Gauss-Legendre after the t = sin(phi) substitution that removes the
/// endpoint weight singularity.
double bessel_j_integral(BesselOrder order, double x);

/// Closed sin/cos form for half-integer orders (2 nu odd), any x > 0.
double bessel_j_half_closed(double nu, double x);

/// J_nu(x) for any half-integer nu (2 nu integer, possibly negative),
/// routing between series, closed forms, integral representation, and the
/// three-term recurrence as appropriate.
double bessel_j(double nu, double x);

/// alpha-th derivative of t -> J_nu(t) at x via the difference identity
/// d^a J_nu = 2^-a sum_j (-1)^j C(a,j) J_{nu-a+2j}. alpha <= 8.
double bessel_j_derivative(BesselOrder order, double x, int alpha);

/// Binomial coefficient as a double (n <= 60).
double binomial(int n, int k);

} // namespace maxbound::specfun
