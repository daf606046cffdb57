#pragma once

#include <span>
#include <utility>
#include <vector>

namespace maxbound::fourier {

enum class BodyKind { BallProduct, SphereProduct };

/// A product of Euclidean balls or spheres: factor dimensions n_k, factor
/// radii, and the induced variable groups V_k partitioning {1..n}.
struct ProductGeometry {
    BodyKind kind;
    std::vector<int> factor_dims;
    std::vector<double> radii;

    static ProductGeometry ball_product(std::vector<int> dims,
                                        std::vector<double> radii);
    static ProductGeometry sphere_product(std::vector<int> dims,
                                          std::vector<double> radii);
    /// ell equal ball factors of dimension N with unit volume each.
    static ProductGeometry normalized_ball_product(int N, int ell);
    /// ell equal sphere factors S^{N-1}_R with unit surface measure each.
    static ProductGeometry normalized_sphere_product(int N, int ell);

    int factor_count() const { return static_cast<int>(factor_dims.size()); }
    int total_dim() const;
    /// Half-open index range of variable group V_k.
    std::pair<int, int> block(int k) const;
};

/// A frequency vector with block views defined by a geometry.
struct Frequency {
    std::vector<double> xi;
};

/// Per-block Euclidean norms |zeta_k|; throws ShapeError on length mismatch.
std::vector<double> block_norms(const ProductGeometry& geom,
                                const Frequency& xi);

/// Radius r_N of the N-ball with unit Lebesgue volume.
double unit_volume_radius(int N);

/// Radius R of the sphere S^{N-1}_R with unit surface measure.
double unit_measure_sphere_radius(int N);

/// |B_r^N|.
double ball_volume(int N, double r);

/// |S^{N-1}_R|.
double sphere_surface_measure(int N, double R);

/// Fourier transform of the indicator of B_r^N at radial frequency |zeta|.
/// Dispatches between the power series (small 2 pi r |zeta|) and the Bessel
/// closed form; the two branches are also exposed for cross-validation.
double ball_ft(int N, double r, double zeta_norm);
double ball_ft_series(int N, double r, double zeta_norm);
double ball_ft_bessel(int N, double r, double zeta_norm);
double ball_ft(int N, double r, std::span<const double> zeta);

/// Fourier transform of the surface measure of S^{N-1}_R at |zeta|; value at
/// 0 is the total measure (1 for the normalized radius).
double sphere_ft(int N, double R, double zeta_norm);
double sphere_ft_series(int N, double R, double zeta_norm);
double sphere_ft_bessel(int N, double R, double zeta_norm);
double sphere_ft(int N, double R, std::span<const double> zeta);

/// Product multiplier of a sphere product: prod_k sphere_ft(zeta_k).
double product_multiplier(const ProductGeometry& geom, const Frequency& xi);

/// Same, evaluated from precomputed block norms.
double product_multiplier_from_norms(const ProductGeometry& geom,
                                     std::span<const double> zeta_norms);

enum class ReferenceKernel { Gaussian, Poisson, PoissonBand };

/// exp(-u^2), exp(-u), or exp(-u) - exp(-2u) at u = |xi|.
double reference_kernel_ft(ReferenceKernel kind, double xi_norm);

/// Second derivative at 0 of the radial profile of ball_ft(N, r, .) as given
/// by its power series: -(2 pi r)^2 / (N + 2). Recorded because two other
/// candidate values for this coefficient circulate; the series is the ground
/// truth here.
double ball_series_second_derivative_at_zero(int N, double r);

} // namespace maxbound::fourier
