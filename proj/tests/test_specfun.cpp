#include <doctest.h>

#include <cmath>
#include <vector>

#include "maxbound/errors.hpp"
#include "maxbound/specfun.hpp"

using namespace maxbound;
namespace sf = maxbound::specfun;
using sf::BesselOrder;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}
} // namespace

TEST_CASE("gamma: spot values and identities") {
    CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sf::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(sf::gamma(0.5) * sf::gamma(0.5) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(sf::gamma(2.5) ==
          doctest::Approx(3.0 * std::sqrt(kPi) / 4.0).epsilon(1e-13));

    // Recurrence, reflection, duplication across (0, 50].
    for (double x : {0.1, 0.3, 0.7, 1.5, 2.5, 4.0, 7.3, 12.0, 21.7, 33.3,
                     49.5}) {
        CHECK(rel_err(sf::gamma(x + 1.0), x * sf::gamma(x)) < 1e-12);
        double dup = sf::gamma(x) * sf::gamma(x + 0.5) *
                     std::pow(2.0, 2.0 * x - 1.0) / std::sqrt(kPi);
        CHECK(rel_err(dup, sf::gamma(2.0 * x)) < 1e-12);
        if (x < 1.0) {
            double refl = sf::gamma(x) * sf::gamma(1.0 - x);
            CHECK(rel_err(refl, kPi / std::sin(kPi * x)) < 1e-12);
        }
        CHECK(rel_err(std::exp(sf::log_gamma(x)), sf::gamma(x)) < 1e-12);
    }

    CHECK_THROWS_AS(sf::gamma(0.0), DomainError);
    CHECK_THROWS_AS(sf::gamma(-1.5), DomainError);
}

TEST_CASE("gamma: complex values and reciprocal") {
    std::complex<double> z(2.5, 0.0);
    CHECK(std::abs(sf::gamma(z) - 3.0 * std::sqrt(kPi) / 4.0) < 1e-13);
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    std::complex<double> w(0.3, 0.8);
    auto lhs = sf::gamma(w) * sf::gamma(1.0 - w);
    auto rhs = kPi / std::sin(kPi * w);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
    // rgamma is finite (zero) at the poles.
    CHECK(std::abs(sf::rgamma(std::complex<double>(0.0, 0.0))) < 1e-14);
    CHECK(std::abs(sf::rgamma(std::complex<double>(-2.0, 0.0))) < 1e-13);
    CHECK(std::abs(sf::rgamma(w) * sf::gamma(w) - 1.0) < 1e-12);
}

TEST_CASE("bessel_j_series: spot values") {
    CHECK(sf::bessel_j_series(BesselOrder(0.0), 0.0) == 1.0);
    CHECK(std::abs(sf::bessel_j_series(BesselOrder(0.5), kPi)) < 1e-13);
    double closed =
        std::sqrt(2.0 / (kPi * 2.0)) * (std::sin(2.0) / 2.0 - std::cos(2.0));
    CHECK(rel_err(sf::bessel_j_series(BesselOrder(1.5), 2.0), closed) < 1e-12);
    CHECK_THROWS_AS(sf::bessel_j_series(BesselOrder(0.0), 31.0), RangeError);
    CHECK_THROWS_AS(BesselOrder(-1.0), DomainError);
    CHECK_THROWS_AS(BesselOrder(0.7), DomainError);
}

TEST_CASE("bessel_j_integral: spot values") {
    CHECK(sf::bessel_j_integral(BesselOrder(0.5), 0.0) == 0.0);
    CHECK(std::abs(sf::bessel_j_integral(BesselOrder(0.0), 2.4048255577)) < 1e-9);
    double a = sf::bessel_j_integral(BesselOrder(1.0), 1.0);
    double b = sf::bessel_j_series(BesselOrder(1.0), 1.0);
    CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(b)));
    CHECK_THROWS_AS(sf::bessel_j_integral(BesselOrder(-0.5), 1.0), DomainError);
}

TEST_CASE("bessel routes agree across orders and arguments") {
    for (double nu = 0.0; nu <= 4.5; nu += 0.5) {
        for (double x = 0.1; x <= 29.9; x += 1.37) {
            double s = sf::bessel_j_series(BesselOrder(nu), x);
            if (nu > -0.5) {
                double q = sf::bessel_j_integral(BesselOrder(nu), x);
                CHECK(std::abs(s - q) <= 1e-10 * std::max(1.0, std::abs(s)));
            }
            if (2.0 * nu == std::round(2.0 * nu) &&
                std::llround(2.0 * nu) % 2 != 0) {
                double c = sf::bessel_j_half_closed(nu, x);
                CHECK(std::abs(s - c) <= 1e-10 * std::max(1.0, std::abs(s)));
            }
        }
    }
    // Large-argument router consistency near the series/closed-form switch.
    for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 3.5}) {
        double lo = sf::bessel_j(nu, 29.999);
        double hi = sf::bessel_j(nu, 30.001);
        CHECK(std::abs(hi - lo) < 1e-3);  // continuity across the switch
        if (nu > -0.5) {
            double q = sf::bessel_j_integral(BesselOrder(nu), 37.7);
            CHECK(std::abs(sf::bessel_j(nu, 37.7) - q) < 1e-10);
        }
    }
}

TEST_CASE("bessel recurrence residual") {
    for (double nu = 0.5; nu <= 4.5; nu += 0.5) {
        for (double x = 0.1; x <= 45.0; x += 2.3) {
            double resid = sf::bessel_j(nu - 1.0, x) + sf::bessel_j(nu + 1.0, x) -
                           (2.0 * nu / x) * sf::bessel_j(nu, x);
            CHECK(std::abs(resid) <= 1e-9);
        }
    }
}

TEST_CASE("bessel_j_derivative") {
    CHECK(sf::bessel_j_derivative(BesselOrder(1.0), 3.0, 0) ==
          doctest::Approx(sf::bessel_j(1.0, 3.0)).epsilon(1e-14));
    // First-derivative identity J_0' = -J_1.
    CHECK(sf::bessel_j_derivative(BesselOrder(0.0), 2.0, 1) ==
          doctest::Approx(-sf::bessel_j(1.0, 2.0)).epsilon(1e-13));
    // alpha = 1 equals (J_{nu-1} - J_{nu+1})/2 bit-for-bit (same code path).
    for (double nu : {0.5, 1.0, 2.5}) {
        double d = sf::bessel_j_derivative(BesselOrder(nu), 1.3, 1);
        double ref = 0.5 * (sf::bessel_j(nu - 1.0, 1.3) - sf::bessel_j(nu + 1.0, 1.3));
        CHECK(std::abs(d - ref) <= 1e-14);
    }
    // Second derivative vs central finite differences of the closed form.
    {
        double x = 1.7, h = 1e-3;
        auto f = [](double t) { return sf::bessel_j_half_closed(0.5, t); };
        double fd = (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) +
                     16 * f(x + h) - f(x + 2 * h)) /
                    (12 * h * h);
        CHECK(std::abs(sf::bessel_j_derivative(BesselOrder(0.5), x, 2) - fd) <
              1e-5);
    }
    CHECK_THROWS_AS(sf::bessel_j_derivative(BesselOrder(0.0), 1.0, 9),
                    DomainError);
}

TEST_CASE("negative-order evaluation via recurrence") {
    // Integer: J_{-n} = (-1)^n J_n.
    CHECK(sf::bessel_j(-2.0, 5.0) ==
          doctest::Approx(sf::bessel_j(2.0, 5.0)).epsilon(1e-13));
    CHECK(sf::bessel_j(-3.0, 5.0) ==
          doctest::Approx(-sf::bessel_j(3.0, 5.0)).epsilon(1e-13));
    // Half-integer: check against the closed forms.
    for (double x : {0.5, 2.0, 11.0, 40.0}) {
        double got = sf::bessel_j(-1.5, x);
        double want = std::sqrt(2.0 / (kPi * x)) *
                      (-std::cos(x) / x - std::sin(x));
        CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
}
