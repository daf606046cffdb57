#include "maxbound/fourier.hpp"

#include <cmath>
#include <string>

#include "maxbound/errors.hpp"
#include "maxbound/specfun.hpp"

namespace maxbound::fourier {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

// Switch between the power series and the Bessel form at 2 pi r |zeta| = 1/2;
// below it the |zeta|^{-nu} prefactor is a removable singularity.
constexpr double kBranchSwitch = 0.5;

void check_dims(const std::vector<int>& dims, const std::vector<double>& radii,
                bool sphere) {
    if (dims.empty() || dims.size() != radii.size())
        throw ShapeError("ProductGeometry: dims/radii size mismatch");
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (dims[k] < (sphere ? 2 : 1))
            throw DomainError("ProductGeometry: factor dimension too small");
        if (!(radii[k] > 0.0))
            throw DomainError("ProductGeometry: radii must be positive");
    }
}

// sum_k (-1)^k u^{2k}/(2k)! prod_{j<k} (j+1/2)/(j+den0); den0 = N/2 for the
// sphere series and N/2+1 for the ball series. Converges in a few terms for
// u < 1/2.
double alternating_series(double u, double den0) {
    double u2 = u * u;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 64; ++k) {
        term *= -u2 / ((2 * k + 1) * (2 * k + 2)) * (k + 0.5) / (k + den0);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

} // namespace

ProductGeometry ProductGeometry::ball_product(std::vector<int> dims,
                                              std::vector<double> radii) {
    check_dims(dims, radii, false);
    return {BodyKind::BallProduct, std::move(dims), std::move(radii)};
}

ProductGeometry ProductGeometry::sphere_product(std::vector<int> dims,
                                                std::vector<double> radii) {
    check_dims(dims, radii, true);
    return {BodyKind::SphereProduct, std::move(dims), std::move(radii)};
}

ProductGeometry ProductGeometry::normalized_ball_product(int N, int ell) {
    if (N < 1 || ell < 1)
        throw DomainError("normalized_ball_product: N, ell >= 1");
    return ball_product(std::vector<int>(ell, N),
                        std::vector<double>(ell, unit_volume_radius(N)));
}

ProductGeometry ProductGeometry::normalized_sphere_product(int N, int ell) {
    if (N < 2 || ell < 1)
        throw DomainError("normalized_sphere_product: N >= 2, ell >= 1");
    return sphere_product(
        std::vector<int>(ell, N),
        std::vector<double>(ell, unit_measure_sphere_radius(N)));
}

int ProductGeometry::total_dim() const {
    int n = 0;
    for (int d : factor_dims) n += d;
    return n;
}

std::pair<int, int> ProductGeometry::block(int k) const {
    int begin = 0;
    for (int j = 0; j < k; ++j) begin += factor_dims[j];
    return {begin, begin + factor_dims[k]};
}

std::vector<double> block_norms(const ProductGeometry& geom,
                                const Frequency& xi) {
    if (static_cast<int>(xi.xi.size()) != geom.total_dim())
        throw ShapeError("block_norms: frequency length " +
                         std::to_string(xi.xi.size()) + " != total dim " +
                         std::to_string(geom.total_dim()));
    std::vector<double> norms(geom.factor_count());
    int pos = 0;
    for (int k = 0; k < geom.factor_count(); ++k) {
        double s = 0.0;
        for (int j = 0; j < geom.factor_dims[k]; ++j, ++pos)
            s += xi.xi[pos] * xi.xi[pos];
        norms[k] = std::sqrt(s);
    }
    return norms;
}

double unit_volume_radius(int N) {
    if (N < 1) throw DomainError("unit_volume_radius: N >= 1");
    return std::exp(specfun::log_gamma(0.5 * N + 1.0) / N) / std::sqrt(kPi);
}

double unit_measure_sphere_radius(int N) {
    if (N < 2) throw DomainError("unit_measure_sphere_radius: N >= 2");
    double log_r = (specfun::log_gamma(0.5 * N) - std::log(2.0) -
                    0.5 * N * std::log(kPi)) /
                   (N - 1);
    return std::exp(log_r);
}

double ball_volume(int N, double r) {
    return std::exp(0.5 * N * std::log(kPi) + N * std::log(r) -
                    specfun::log_gamma(0.5 * N + 1.0));
}

double sphere_surface_measure(int N, double R) {
    return 2.0 * std::exp(0.5 * N * std::log(kPi) + (N - 1) * std::log(R) -
                          specfun::log_gamma(0.5 * N));
}

double ball_ft_series(int N, double r, double zeta_norm) {
    double u = kTwoPi * r * zeta_norm;
    return ball_volume(N, r) * alternating_series(u, 0.5 * N + 1.0);
}

double ball_ft_bessel(int N, double r, double zeta_norm) {
    return std::pow(r / zeta_norm, 0.5 * N) *
           specfun::bessel_j(0.5 * N, kTwoPi * r * zeta_norm);
}

double ball_ft(int N, double r, double zeta_norm) {
    if (N < 1) throw DomainError("ball_ft: N >= 1");
    if (!(r > 0.0)) throw DomainError("ball_ft: r > 0");
    zeta_norm = std::abs(zeta_norm);
    if (kTwoPi * r * zeta_norm < kBranchSwitch)
        return ball_ft_series(N, r, zeta_norm);
    return ball_ft_bessel(N, r, zeta_norm);
}

double ball_ft(int N, double r, std::span<const double> zeta) {
    if (static_cast<int>(zeta.size()) != N)
        throw ShapeError("ball_ft: frequency length != N");
    double s = 0.0;
    for (double v : zeta) s += v * v;
    return ball_ft(N, r, std::sqrt(s));
}

double sphere_ft_series(int N, double R, double zeta_norm) {
    double u = kTwoPi * R * zeta_norm;
    return sphere_surface_measure(N, R) * alternating_series(u, 0.5 * N);
}

double sphere_ft_bessel(int N, double R, double zeta_norm) {
    double nu = 0.5 * (N - 2);
    return kTwoPi * std::pow(R, 0.5 * N) * std::pow(zeta_norm, -nu) *
           specfun::bessel_j(nu, kTwoPi * R * zeta_norm);
}

double sphere_ft(int N, double R, double zeta_norm) {
    if (N < 2) throw DomainError("sphere_ft: N >= 2");
    if (!(R > 0.0)) throw DomainError("sphere_ft: R > 0");
    zeta_norm = std::abs(zeta_norm);
    if (kTwoPi * R * zeta_norm < kBranchSwitch)
        return sphere_ft_series(N, R, zeta_norm);
    return sphere_ft_bessel(N, R, zeta_norm);
}

double sphere_ft(int N, double R, std::span<const double> zeta) {
    if (static_cast<int>(zeta.size()) != N)
        throw ShapeError("sphere_ft: frequency length != N");
    double s = 0.0;
    for (double v : zeta) s += v * v;
    return sphere_ft(N, R, std::sqrt(s));
}

double product_multiplier(const ProductGeometry& geom, const Frequency& xi) {
    auto norms = block_norms(geom, xi);
    return product_multiplier_from_norms(geom, norms);
}

double product_multiplier_from_norms(const ProductGeometry& geom,
                                     std::span<const double> zeta_norms) {
    if (geom.kind != BodyKind::SphereProduct)
        throw DomainError("product_multiplier: sphere products only");
    if (static_cast<int>(zeta_norms.size()) != geom.factor_count())
        throw ShapeError("product_multiplier: norm count != factor count");
    double prod = 1.0;
    for (int k = 0; k < geom.factor_count(); ++k)
        prod *= sphere_ft(geom.factor_dims[k], geom.radii[k], zeta_norms[k]);
    return prod;
}

double reference_kernel_ft(ReferenceKernel kind, double xi_norm) {
    if (xi_norm < 0.0) throw DomainError("reference_kernel_ft: |xi| >= 0");
    switch (kind) {
        case ReferenceKernel::Gaussian:
            return std::exp(-xi_norm * xi_norm);
        case ReferenceKernel::Poisson:
            return std::exp(-xi_norm);
        case ReferenceKernel::PoissonBand:
            return std::exp(-xi_norm) - std::exp(-2.0 * xi_norm);
    }
    throw DomainError("reference_kernel_ft: unknown kernel");
}

double ball_series_second_derivative_at_zero(int N, double r) {
    // k = 1 coefficient of the series times d^2/dt^2 t^2.
    double u1 = kTwoPi * r;
    return -u1 * u1 * (0.5 / (0.5 * N + 1.0));
}

} // namespace maxbound::fourier
