#include "doctest.h"

#include <cmath>

#include "qdh/recurrence.hpp"

using namespace qdh;

namespace {

FamilyParams sample()
{
    FamilyParams p;
    p.q = 0.5;
    p.A = 0.35;
    p.B = 0.45;
    p.C = 0.55;
    p.D = 0.65;
    p.delta = 0.4;
    p.a = 0.3;
    return p;
}

} // namespace

TEST_CASE("family names round-trip")
{
    for (Family f : kAllFamilies)
        CHECK(family_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(family_from_string("no-such-family"), Error);
}

TEST_CASE("required parameters")
{
    CHECK(required_params(Family::CDQH) == std::vector<std::string>{"A", "B", "C", "D"});
    CHECK(required_params(Family::FourthLimit).empty());
    CHECK(required_params(Family::QBesselOrder) == std::vector<std::string>{"a"});
}

TEST_CASE("forward recurrence seeds give monic polynomials")
{
    for (Family f : kAllFamilies) {
        CAPTURE(to_string(f));
        FamilyParams p = sample();
        // P_1 = z - a_0
        cplx z(0.7, 0.3);
        SolutionSequence s = forward_eval(CoefficientFamily{f, p, z}, 0.0, 1.0, 5);
        CHECK(std::abs(s.at(1) - (z - coeffs(f, p, 0).a)) < 1e-14);
        // leading coefficient 1: P_5(z)/z^5 -> 1
        cplx big(1e6, 0.0);
        SolutionSequence t = forward_eval(CoefficientFamily{f, p, big}, 0.0, 1.0, 5);
        CHECK(std::abs(t.at(5) / std::pow(big, 5.0) - 1.0) < 1e-4);
    }
}

TEST_CASE("monic_poly matches forward_eval")
{
    CoefficientFamily fam{Family::Wall, sample(), cplx(1.2, -0.4)};
    SolutionSequence s = forward_eval(fam, 0.0, 1.0, 7);
    CHECK(std::abs(monic_poly(fam, 7) - s.at(7)) < 1e-12 * std::abs(s.at(7)));
}

TEST_CASE("cdqh coefficients")
{
    FamilyParams p = sample();
    const double q = p.q;
    Coeffs c = coeffs(Family::CDQH, p, 2);
    cplx s = 1.0 / p.A + 1.0 / p.B + 1.0 / p.C + 1.0 / p.D;
    CHECK(std::abs(c.a - (s * q * q - (1.0 + q) * q * q * q)) < 1e-14);
    cplx b2 = q / (p.A * p.B * p.C * p.D) * (1.0 - p.A * q) * (1.0 - p.B * q) * (1.0 - p.C * q) * (1.0 - p.D * q);
    CHECK(std::abs(c.b2 - b2) < 1e-13);
}

TEST_CASE("birth and death rates reproduce the recurrence")
{
    FamilyParams p = sample();
    for (long n = 1; n < 5; ++n) {
        auto r = birth_death_rates(p, n);
        auto rm = birth_death_rates(p, n - 1);
        Coeffs c = coeffs(Family::CDQH, p, n);
        CHECK(std::abs(c.b2 - rm.lambda * r.mu) < 1e-12 * std::abs(c.b2));
    }
}

TEST_CASE("relative residual of the forward solution is tiny")
{
    CoefficientFamily fam{Family::AlSalamChihara, sample(), cplx(2.0, 1.0)};
    SolutionSequence s = forward_eval(fam, 0.0, 1.0, 20);
    for (long n = 1; n < 20; ++n)
        CHECK(relative_residual(fam, s, n) < 1e-14);
}

TEST_CASE("truncated and adaptive continued fractions agree off the support")
{
    CoefficientFamily fam{Family::CDQH, sample(), cplx(30.0, 2.0)};
    auto ad = cf_adaptive(fam, 1e-14);
    CHECK(ad.converged);
    cplx tr = cf_truncated(fam, 400);
    CHECK(std::abs(ad.value - tr) < 1e-12 * std::abs(tr));
}

TEST_CASE("window access outside the computed range throws")
{
    CoefficientFamily fam{Family::Wall, sample(), cplx(1.0, 0.0)};
    SolutionSequence s = forward_eval(fam, 0.0, 1.0, 3);
    CHECK_THROWS_AS(s.at(10), Error);
}
