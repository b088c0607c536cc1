#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qdh/error.hpp"
#include "qdh/quadrature.hpp"

using namespace qdh;

TEST_CASE("Gauss-Legendre is exact for polynomials of degree 2n-1")
{
    QuadRule r = gauss_legendre(6);
    CHECK(r.nodes.size() == 6);
    CHECK(std::is_sorted(r.nodes.begin(), r.nodes.end()));
    CHECK(std::abs(r.integrate([](double x) { return std::pow(x, 10); }) - 2.0 / 11.0) < 1e-14);
    CHECK(std::abs(r.integrate([](double x) { return std::pow(x, 11) + 1.0; }) - 2.0) < 1e-14);
}

TEST_CASE("large Gauss-Legendre rules stay accurate")
{
    QuadRule r = gauss_legendre(2000);
    CHECK(std::abs(r.integrate([](double x) { return std::exp(x); }) - (std::exp(1.0) - std::exp(-1.0))) < 1e-13);
}

TEST_CASE("cos midpoint handles the square-root edge")
{
    QuadRule r = cos_midpoint(400);
    // integral of sqrt(1-x^2) is pi/2
    CHECK(std::abs(r.integrate([](double x) { return std::sqrt(1.0 - x * x); }) - std::numbers::pi / 2) < 1e-12);
}

TEST_CASE("rule size must be positive")
{
    CHECK_THROWS_AS(gauss_legendre(0), Error);
    CHECK_THROWS_AS(cos_midpoint(-1), Error);
}
