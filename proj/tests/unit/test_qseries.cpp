#include "doctest.h"

#include <cmath>

#include "qdh/qseries.hpp"

using namespace qdh;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST_CASE("qpoch finite, empty and infinite")
{
    CHECK(qpoch(0.3, 0.5, 0) == cplx(1.0));
    CHECK(std::abs(qpoch(0.3, 0.5, 2) - 0.7 * 0.85) < 1e-15);
    // (a)_inf = (a)_n (a q^n)_inf
    cplx full = qpoch_inf(0.3, 0.5), part = qpoch(0.3, 0.5, 5) * qpoch_inf(0.3 * std::pow(0.5, 5), 0.5);
    CHECK(rel(full, part) < 1e-14);
    CHECK(qpoch(0.3, 0.5, kInf) == qpoch_inf(0.3, 0.5));
}

TEST_CASE("qpoch negative index is the reciprocal shift")
{
    // (a)_{-n} = 1/(a q^{-n})_n
    cplx a(0.4, 0.1);
    cplx v = qpoch(a, 0.6, -3);
    cplx w = 1.0 / qpoch(a * std::pow(0.6, -3), 0.6, 3);
    CHECK(rel(v, w) < 1e-14);
}

TEST_CASE("qpoch_multi multiplies")
{
    cplx m = qpoch_multi({0.2, 0.7}, 0.5, 4);
    CHECK(rel(m, qpoch(0.2, 0.5, 4) * qpoch(0.7, 0.5, 4)) < 1e-15);
}

TEST_CASE("base outside (0,1) is rejected")
{
    CHECK_THROWS_AS(QBase(1.0), Error);
    CHECK_THROWS_AS(QBase(0.0), Error);
    CHECK_THROWS_AS(qpoch(0.3, 1.5, 2), Error);
    CHECK_NOTHROW(QBase(0.5));
}

TEST_CASE("q-binomial theorem by direct summation")
{
    const double q = 0.55;
    cplx a(0.3, 0.2), z(0.4, -0.3);
    cplx lhs = phi(SeriesSpec{{a}, {}, q, z}, TruncationPolicy{1e-15, 5000});
    cplx rhs = qpoch_inf(a * z, q) / qpoch_inf(z, q);
    CHECK(rel(lhs, rhs) < 1e-13);
}

TEST_CASE("terminating series stops at the q^-n parameter")
{
    const double q = 0.5;
    CHECK(termination_index({std::pow(q, -4), 0.3}, q, 100) == 4);
    CHECK(termination_index({0.3}, q, 100) == -1);
    SeriesValue v = phi_eval(SeriesSpec{{std::pow(q, -4), 0.3}, {0.7}, q, q});
    CHECK(v.terms <= 5);
}

TEST_CASE("q-Saalschutz sum for a balanced terminating 3phi2")
{
    // 3phi2(q^-n, a, b; c, abq^{1-n}/c; q, q) = (c/a, c/b)_n / (c, c/ab)_n
    const double q = 0.5;
    const long n = 6;
    cplx a = 0.3, b = 0.45, c = 0.8;
    cplx qn = std::pow(q, -n);
    cplx lhs = phi(SeriesSpec{{qn, a, b}, {c, a * b * q / (c * std::pow(q, n))}, q, q});
    cplx rhs = qpoch(c / a, q, n) * qpoch(c / b, q, n) / (qpoch(c, q, n) * qpoch(c / (a * b), q, n));
    CHECK(rel(lhs, rhs) < 1e-12);
}

TEST_CASE("balanced 3phi2 continuation agrees with the direct sum where both converge")
{
    const double q = 0.5;
    cplx a = 0.4, b = 0.5, c = 0.6, d = 0.3, e = 0.35;
    // de/abc = 0.875
    cplx direct = phi(SeriesSpec{{a, b, c}, {d, e}, q, d * e / (a * b * c)});
    cplx best = phi32(a, b, c, d, e, q);
    CHECK(rel(direct, best) < 1e-11);
}

TEST_CASE("2phi1 beyond the unit disk")
{
    // Heine's q-Gauss sum at z = c/ab, then compare the continued value at |z| > 1
    // against the Jackson-transformed series
    const double q = 0.5;
    cplx a = 0.3, b = 0.2, c = 0.7;
    cplx z = c / (a * b);
    cplx gauss = qpoch_inf(c / a, q) * qpoch_inf(c / b, q) / (qpoch_inf(c, q) * qpoch_inf(c / (a * b), q));
    CHECK(rel(unscaled(phi21_cont(a, b, c, z, q)), gauss) < 1e-11);
}

TEST_CASE("divergent series is reported, not summed")
{
    CHECK_THROWS_AS(phi_eval(SeriesSpec{{0.3, 0.4}, {0.5}, 0.5, 2.0}), Error);
}

TEST_CASE("unscaled folds the log scale and detects overflow")
{
    SeriesValue v;
    v.value = 2.0;
    v.log_scale = std::log(3.0);
    CHECK(rel(unscaled(v), 6.0) < 1e-15);
    v.log_scale = 1000.0;
    CHECK_THROWS_AS(unscaled(v), Error);
}

TEST_CASE("every transformation identity holds at a sample point")
{
    const double q = 0.45;
    struct Case {
        TransformId id;
        std::vector<cplx> p;
    };
    const Case cases[] = {
        {TransformId::BalancedEA, {0.6, 0.5, 0.7, 0.4, 0.3}},
        {TransformId::BalancedB, {0.6, 0.5, 0.7, 0.4, 0.3}},
        {TransformId::Heine, {0.3, 0.5, 0.6, cplx(0.4, 0.2)}},
        {TransformId::Jackson, {0.3, 0.5, 0.6, cplx(0.4, 0.2)}},
        {TransformId::ConfluentB0, {0.3, 0.6, cplx(0.5, -0.1)}},
        {TransformId::ConfluentB0Phi11, {0.3, 0.6, cplx(0.5, -0.1)}},
        {TransformId::Phi11Swap, {0.4, 0.6, cplx(1.5, 0.7)}},
        {TransformId::Phi11Zero, {0.6, cplx(2.0, 0.5)}},
        {TransformId::Phi01ToPhi11, {0.6, cplx(-1.2, 0.5)}},
        {TransformId::QBinomial, {cplx(1.5, 0.3), cplx(0.3, 0.4)}},
    };
    for (const auto& c : cases) {
        CAPTURE(to_string(c.id));
        auto s = transform_check(c.id, c.p, q);
        CHECK(rel(s.lhs, s.rhs) < 1e-11);
    }
}

TEST_CASE("truncation policy validation")
{
    TruncationPolicy bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    TruncationPolicy few;
    few.max_terms = 3;
    CHECK_THROWS_AS(phi_eval(SeriesSpec{{0.3}, {0.5}, 0.9, 0.95}, few), Error);
}
