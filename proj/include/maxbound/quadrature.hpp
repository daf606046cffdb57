#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace maxbound::quad {

/// Gauss-Legendre rule on [-1, 1]; nodes/weights are computed once per n and
/// cached. n up to 2048.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int n);

/// Integrates f over [a, b] with an n-point rule.
template <typename Fn>
double gl_integrate(Fn&& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

/// Result of an adaptive evaluation: value and the last doubling increment,
/// which serves as the error estimate.
struct Adaptive {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// Doubles the node count (n0, 2 n0, ...) until two successive values agree
/// to tol * max(1, |value|), up to n_max nodes.
Adaptive adaptive_gl(const std::function<double(double)>& f, double a, double b,
                     double tol, int n0 = 16, int n_max = 2048);

/// Integrates f over [lo, hi] where f may vary sharply near lo: the interval
/// is split geometrically toward lo and each piece gets an n-point rule.
double gl_geometric(const std::function<double(double)>& f, double lo,
                    double hi, int pieces, int n);

} // namespace maxbound::quad
