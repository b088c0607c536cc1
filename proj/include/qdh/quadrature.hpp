#pragma once

// Quadrature rules on (-1,1) for integrals of f(x) dx.

#include <functional>
#include <vector>

namespace qdh {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    double integrate(const std::function<double(double)>& f) const;
};

// n-point Gauss-Legendre, nodes ascending.
QuadRule gauss_legendre(int n);

// x = cos(theta), midpoint rule in theta on (0, pi): weights pi/n sin(theta_j).
// Converges fast when f(x) sqrt(1-x^2) is smooth in theta.
QuadRule cos_midpoint(int n);

} // namespace qdh
