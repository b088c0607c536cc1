#include "doctest.h"

#include <cmath>

#include "qdh/cdqhahn.hpp"

using namespace qdh;

namespace {

const CDQHParams kP{0.5, 0.31, 0.47, 0.63, 0.72};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST_CASE("alpha and spectral variables")
{
    cplx al = cdqh_alpha(kP);
    CHECK(std::abs(al - std::sqrt(kP.A * kP.B * kP.C * kP.D / kP.q) / 2.0) < 1e-15);
    SpectralPoint pt = spectral_point_x(kP, cplx(2.5, 0.3));
    CHECK(std::abs(pt.x - cplx(2.5, 0.3)) < 1e-15);
    CHECK(std::abs((pt.u + 1.0 / pt.u) / 2.0 - pt.x) < 1e-14);
    CHECK(std::abs(pt.u) >= 1.0);
    CHECK(std::abs(pt.lambda_plus * pt.lambda_minus - 1.0 / (4.0 * pt.alpha * pt.alpha)) < 1e-12);
}

TEST_CASE("a real point on the cut needs a side")
{
    CHECK_THROWS_AS(spectral_point_x(kP, 0.4), Error);
    SpectralPoint up = spectral_point_x(kP, 0.4, Side::AbovePlus);
    SpectralPoint dn = spectral_point_x(kP, 0.4, Side::BelowMinus);
    CHECK(std::abs(up.u - std::conj(dn.u)) < 1e-15);
    CHECK(std::abs(std::abs(up.u) - 1.0) < 1e-15);
}

TEST_CASE("explicit polynomial base cases")
{
    SpectralPoint pt = spectral_point_x(kP, cplx(1.7, 0.2));
    CHECK(std::abs(explicit_poly(kP, pt, 0) - 1.0) < 1e-15);
    cplx p1 = pt.z - coeffs(Family::CDQH, kP.family(), 0).a;
    CHECK(rel(explicit_poly(kP, pt, 1), p1) < 1e-13);
    CHECK(rel(explicit_poly_ir(kP, pt, 1), p1) < 1e-13);
}

TEST_CASE("explicit forms agree with the recurrence at small q")
{
    // cancellation here is far beyond double precision in the naive sums
    CDQHParams p{0.12, 0.6, 0.44, 0.58, 0.76};
    SpectralPoint pt = spectral_point_x(p, cplx(-1.4, 0.6));
    SolutionSequence P = forward_eval(p.at(pt.z), 0.0, 1.0, 10);
    CHECK(rel(explicit_poly(p, pt, 10), P.at(10)) < 1e-9);
    CHECK(rel(explicit_poly_ir(p, pt, 10), P.at(10)) < 1e-9);
}

TEST_CASE("closed-form solutions satisfy the recurrence")
{
    SpectralPoint pt = spectral_point_x(kP, cplx(1.9, -0.4));
    for (Solution s : {Solution::X1Minus, Solution::X1Plus, Solution::X2, Solution::X3, Solution::X4, Solution::X5,
                       Solution::X6}) {
        CAPTURE(to_string(s));
        SolutionSequence seq = solution_sequence(kP, pt, s, 0, 22);
        for (long n = 1; n <= 20; ++n)
            CHECK(relative_residual(kP.at(pt.z), seq, n) < 1e-10);
    }
}

TEST_CASE("X6 over X4 is independent of n")
{
    SpectralPoint pt = spectral_point_x(kP, cplx(2.2, 0.5));
    cplx c = x6_over_x4(kP, pt);
    for (long n = 0; n < 8; ++n)
        CHECK(rel(solution(kP, pt, Solution::X6, n), c * solution(kP, pt, Solution::X4, n)) < 1e-10);
}

TEST_CASE("minimal solution gives the continued fraction")
{
    SpectralPoint pt = spectral_point_x(kP, cplx(1.6, 0.2));
    cplx tr = 1.0 / cf_truncated(kP.at(pt.z), 400);
    CHECK(rel(cf_stieltjes(kP, pt, CfForm::Pincherle), tr) < 1e-9);
    CHECK(rel(cf_stieltjes(kP, pt, CfForm::Ratio), tr) < 1e-9);
    CHECK(rel(cf_stieltjes(kP, pt, CfForm::RatioAlt), tr) < 1e-9);
}

TEST_CASE("C = q forms of the continued fraction")
{
    CDQHParams p = kP;
    p.C = p.q;
    SpectralPoint pt = spectral_point_x(p, cplx(-1.8, 0.3));
    cplx tr = 1.0 / cf_truncated(p.at(pt.z), 400);
    CHECK(rel(cf_stieltjes(p, pt, CfForm::CeqQ), tr) < 1e-9);
    CHECK(rel(cf_stieltjes(p, pt, CfForm::CeqQProducts), tr) < 1e-9);
    CHECK_THROWS_AS(cf_stieltjes(kP, pt, CfForm::CeqQ), Error);
}

TEST_CASE("weight routes agree and the weight is positive")
{
    for (double x : {-0.9, -0.3, 0.1, 0.6, 0.95}) {
        CAPTURE(x);
        double w = weight(kP, x, WeightForm::Closed);
        CHECK(w > 0.0);
        CHECK(std::abs(weight(kP, x, WeightForm::Stieltjes) - w) < 1e-8 * std::max(w, 1.0));
    }
    CDQHParams c = kP;
    c.C = c.q;
    for (double x : {-0.5, 0.2, 0.7})
        CHECK(rel(weight(c, x, WeightForm::Closed), weight(c, x, WeightForm::CeqQ)) < 1e-12);
    CHECK_THROWS_AS(weight(kP, 1.5), Error);
}

TEST_CASE("generating function coefficients")
{
    SpectralPoint pt = spectral_point_x(kP, cplx(0.3, 0.8));
    auto G = genfun_coeffs(kP, pt, 6);
    SolutionSequence P = forward_eval(kP.at(pt.z), 0.0, 1.0, 6);
    const cplx k = 2.0 * pt.alpha;
    for (long n = 0; n <= 6; ++n) {
        cplx want = std::pow(k, static_cast<double>(n)) * P.at(n) / (qpoch(kP.A, kP.q, n) * qpoch(kP.D, kP.q, n));
        CHECK(rel(G[n], want) < 1e-11);
    }
}

TEST_CASE("dual q-Hahn reduction at C = q")
{
    CDQHParams p = kP;
    p.C = p.q;
    SpectralPoint pt = spectral_point_x(p, cplx(1.3, 0.4));
    const cplx k = 2.0 * pt.alpha;
    for (long n = 0; n <= 8; ++n) {
        cplx P = explicit_poly(p, pt, n);
        CHECK(rel(dual_qhahn_reduction(p, pt, n, DualQHahnForm::Monic), P) < 1e-11);
        cplx aw = dual_qhahn_reduction(p, pt, n, DualQHahnForm::AskeyWilson);
        CHECK(rel(aw, std::pow(k, static_cast<double>(n)) * P) < 1e-11);
        CHECK(rel(x2_two_term(p, pt, n), x2_ceqq(p, pt, n)) < 1e-11);
    }
    CHECK_THROWS_AS(dual_qhahn_reduction(kP, pt, 2, DualQHahnForm::Monic), Error);
}

TEST_CASE("three-term relation between X1+, X4 and X2")
{
    SpectralPoint pt = spectral_point_x(kP, cplx(2.4, 0.7));
    for (long n = 0; n <= 10; ++n) {
        auto s = three_term_relation(kP, pt, n);
        CHECK(rel(s.lhs, s.rhs) < 1e-9);
    }
}

TEST_CASE("parameter validation")
{
    CDQHParams bad = kP;
    bad.A = 0.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = kP;
    bad.q = 1.2;
    CHECK_THROWS_AS(bad.validate(), Error);
}
