#include "qdh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdh/error.hpp"

namespace qdh {

double QuadRule::integrate(const std::function<double(double)>& f) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s += weights[i] * f(nodes[i]);
    return s;
}

QuadRule gauss_legendre(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

QuadRule cos_midpoint(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double h = std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
        // descending theta gives ascending x
        double t = (n - j - 0.5) * h;
        r.nodes[j] = std::cos(t);
        r.weights[j] = h * std::sin(t);
    }
    return r;
}

} // namespace qdh
