#include "maxbound/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace maxbound::quad {

namespace {

GaussLegendre build_rule(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-based initial guess.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 64; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

Adaptive adaptive_gl(const std::function<double(double)>& f, double a, double b,
                     double tol, int n0, int n_max) {
    Adaptive out;
    double prev = gl_integrate(f, a, b, n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        double cur = gl_integrate(f, a, b, n);
        out.value = cur;
        out.error = std::abs(cur - prev);
        if (out.error <= tol * std::max(1.0, std::abs(cur))) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    return out;
}

double gl_geometric(const std::function<double(double)>& f, double lo,
                    double hi, int pieces, int n) {
    double sum = 0.0;
    double right = hi;
    for (int j = 0; j < pieces; ++j) {
        double left = lo + (right - lo) * 0.5;
        if (j == pieces - 1) left = lo;
        sum += gl_integrate(f, left, right, n);
        right = left;
    }
    return sum;
}

} // namespace maxbound::quad
