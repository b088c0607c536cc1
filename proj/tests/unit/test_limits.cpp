#include "doctest.h"

#include <cmath>

#include "qdh/limits.hpp"

using namespace qdh;

namespace {

FamilyParams sample(Family f)
{
    FamilyParams p;
    p.q = 0.5;
    p.A = 0.35;
    p.B = 0.45;
    p.C = 0.55;
    p.D = 0.65;
    p.delta = 0.4;
    p.a = f == Family::QBesselOrder ? -0.3 : 0.3;
    return p;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST_CASE("explicit limit polynomials are the monic recurrence polynomials")
{
    for (Family f : kAllFamilies) {
        if (f == Family::CDQH)
            continue;
        CAPTURE(to_string(f));
        FamilyParams p = sample(f);
        const cplx z(0.8, -0.35);
        SolutionSequence P = forward_eval(CoefficientFamily{f, p, z}, 0.0, 1.0, 8);
        for (long n = 0; n <= 8; ++n)
            CHECK(rel(limit_poly(f, p, z, n), P.at(n)) < 1e-11);
    }
    CHECK_THROWS_AS(limit_poly(Family::CDQH, sample(Family::CDQH), 1.0, 2), Error);
    CHECK_THROWS_AS(limit_poly(Family::Wall, sample(Family::Wall), 1.0, 2, PolyForm::Simplified), Error);
}

TEST_CASE("closed continued fractions match the truncated fraction")
{
    for (Family f : kAllFamilies) {
        if (f == Family::CDQH)
            continue;
        CAPTURE(to_string(f));
        FamilyParams p = sample(f);
        cplx z(2.5, 0.9);
        if (has_spectral_scale(f))
            z *= limit_gamma(f, p);
        auto cf = cf_adaptive(CoefficientFamily{f, p, z}, 1e-13);
        REQUIRE(cf.converged);
        CHECK(rel(limit_cf(f, p, z), 1.0 / cf.value) < 1e-9);
    }
}

TEST_CASE("every catalogued non-formal solution solves its recurrence")
{
    for (Family f : kAllFamilies) {
        if (f == Family::CDQH)
            continue;
        FamilyParams p = sample(f);
        const cplx z(2.1, 0.6);
        for (const auto& info : limit_solution_catalog(f)) {
            CAPTURE(info.label);
            if (info.formal) {
                FamilyParams pp = p;
                pp.A = pp.q;
                try {
                    SolutionSequence s = limit_solution_sequence(f, pp, z, info.label, 0, 14);
                    for (long n = 1; n <= 12; ++n)
                        CHECK(relative_residual(CoefficientFamily{f, pp, z}, s, n) < 1e-10);
                } catch (const Error& e) {
                    CHECK(e.kind() == ErrorKind::FormalOnly);
                }
                continue;
            }
            SolutionSequence s = limit_solution_sequence(f, p, z, info.label, 0, 20);
            for (long n = 1; n <= 18; ++n)
                CHECK(relative_residual(CoefficientFamily{f, p, z}, s, n) < 1e-10);
        }
    }
}

TEST_CASE("unknown solution label")
{
    CHECK_THROWS_AS(limit_solution(Family::Wall, sample(Family::Wall), 2.0, "nope", 1), Error);
}

TEST_CASE("reduced weights at A = q")
{
    FamilyParams p = sample(Family::ContQHermite);
    p.A = p.q;
    for (double x : {-0.7, 0.0, 0.45}) {
        auto den = limit_weight_denominators(Family::ContQHermite, p, x);
        CHECK(std::abs(den.first - 1.0) < 1e-13);
        CHECK(std::abs(den.second - 1.0) < 1e-13);
        CHECK(rel(limit_weight(Family::ContQHermite, p, x),
                  limit_weight(Family::ContQHermite, p, x, LimitWeightForm::Reduced)) < 1e-12);
    }
}

TEST_CASE("closed weights agree with Stieltjes inversion")
{
    for (Family f : {Family::AlSalamChihara, Family::ContQHermite, Family::ContBigQHermite}) {
        CAPTURE(to_string(f));
        FamilyParams p = sample(f);
        for (double x : {-0.6, 0.2, 0.8}) {
            double w = limit_weight(f, p, x), s = limit_weight(f, p, x, LimitWeightForm::Stieltjes);
            CHECK(std::abs(w - s) < 1e-8 * std::max(std::abs(w), 1.0));
        }
    }
}

TEST_CASE("fourth-limit zeros are negative, simple and interlace")
{
    for (double q : {0.3, 0.8}) {
        ZeroList a = fourth_limit_zeros(q, 0, 8), b = fourth_limit_zeros(q, 1, 8);
        REQUIRE(a.zeros.size() == 8);
        for (std::size_t i = 0; i < a.zeros.size(); ++i) {
            CHECK(a.zeros[i] < 0.0);
            CHECK(a.bracketing_intervals[i].first <= a.zeros[i]);
            CHECK(a.zeros[i] <= a.bracketing_intervals[i].second);
            const double z = a.zeros[i];
            CHECK(fourth_limit_f(q, 0, z * (1 - 1e-9)) * fourth_limit_f(q, 0, z * (1 + 1e-9)) <= 0.0);
        }
        CHECK(interlaces(a.zeros, b.zeros));
    }
}

TEST_CASE("zero finder and interlacing helper")
{
    ScanOptions opt;
    opt.log_grid = false;
    ZeroList z = find_zeros([](double x) { return std::sin(x); }, 0.5, 10.0, opt);
    REQUIRE(z.zeros.size() == 3);
    CHECK(std::abs(z.zeros[0] - M_PI) < 1e-12);
    CHECK(interlaces({1.0, 3.0}, {2.0, 4.0}));
    CHECK_FALSE(interlaces({1.0, 2.0}, {3.0, 4.0}));
    CHECK_FALSE(interlaces({}, {1.0}));
}

TEST_CASE("positive-definite regimes")
{
    FamilyParams a;
    a.q = 0.5;
    a.A = 0.6;
    a.delta = -0.8;
    CHECK(in_positive_regime(Family::AlSalamCarlitz1, a));
    a.delta = 0.8;
    CHECK_FALSE(in_positive_regime(Family::AlSalamCarlitz1, a));
    FamilyParams b;
    b.q = 0.5;
    b.a = -0.8;
    RegimePair rp = regime_pair(Family::QBesselOrder, b);
    ZeroList zn = find_zeros(rp.num, 0.02, 20.0), zd = find_zeros(rp.den, 0.02, 20.0);
    CHECK(interlaces(zn.zeros, zd.zeros));
}

TEST_CASE("partial fractions of the al-salam-carlitz-1 fraction")
{
    FamilyParams p;
    p.q = 0.5;
    p.A = 0.5;
    p.delta = -0.7;
    for (cplx z : {cplx(2.5, -0.9), cplx(-1.3, 0.4), cplx(0.7, 1.1)})
        CHECK(rel(asc1_partial_fractions(p, z), limit_cf(Family::AlSalamCarlitz1, p, z)) < 1e-10);
}

TEST_CASE("q-Bessel connection ratios are constant")
{
    FamilyParams p;
    p.q = 0.5;
    p.a = -1.0;
    ConnectionRatios cr = qbessel_connection(p, 2.3, 10);
    REQUIRE(cr.first.size() == 11);
    for (std::size_t n = 1; n < cr.first.size(); ++n) {
        CHECK(rel(cr.first[n], cr.first[0]) < 1e-10);
        CHECK(rel(cr.second[n], cr.second[0]) < 1e-10);
    }
}

TEST_CASE("limit edges converge")
{
    CHECK(limit_edges().size() == 11);
    FamilyParams c = sample(Family::Wall);
    for (const auto& e : limit_edges()) {
        CAPTURE(e.name);
        std::vector<double> sc = e.to_zero ? std::vector<double>{1e-2, 1e-3, 1e-4} : std::vector<double>{1e2, 1e3, 1e4};
        auto d = limit_convergence(e.id, c, sc, 3, cplx(0.7, 0.2));
        REQUIRE(d.size() == 3);
        CHECK(d[1] < d[0]);
        CHECK(d[2] < d[1]);
        auto zero = limit_convergence(e.id, c, sc, 0, cplx(0.7, 0.2));
        for (double v : zero)
            CHECK(v == 0.0);
    }
}
