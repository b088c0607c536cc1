#include "doctest.h"

#include <cmath>

#include "json.hpp"
#include "qdh/verify.hpp"

using namespace qdh;

TEST_CASE("report bookkeeping")
{
    CheckReport r;
    r.threshold = 1e-9;
    r.record(1e-12, "x=1", 1.0, 1.0);
    CHECK(r.passed);
    CHECK(r.failures.empty());
    r.record(1e-3, "x=2", 1.0, 1.001);
    CHECK_FALSE(r.passed);
    CHECK(r.failures.size() == 1);
    CHECK(r.points_tested == 2);
    CHECK(r.max_rel_error == doctest::Approx(1e-3));
    r.record_error("x=3", "Overflow");
    CHECK(std::isinf(r.max_rel_error));
    CHECK(r.failures.size() == 2);
}

TEST_CASE("nan discrepancies fail")
{
    CheckReport r;
    r.threshold = 1.0;
    r.record(std::nan(""), "x", 0.0, 0.0);
    CHECK_FALSE(r.passed);
}

TEST_CASE("relative difference")
{
    CHECK(rel_diff(0.0, 0.0) == 0.0);
    CHECK(rel_diff(1.0, 2.0) == doctest::Approx(0.5));
    CHECK(rel_diff(cplx(0, 1), cplx(0, 1)) == 0.0);
}

TEST_CASE("json schema")
{
    CheckReport r;
    r.check_id = "demo";
    r.seed = 7;
    r.threshold = 1e-9;
    r.record(0.5, "a=1", cplx(1, 2), cplx(3, 4));
    auto j = nlohmann::json::parse(to_json(r));
    for (const char* k : {"check_id", "seed", "points", "max_rel_error", "threshold", "pass", "failures"})
        CHECK(j.contains(k));
    CHECK(j["pass"] == false);
    CHECK(j["failures"][0]["lhs"][1] == 2.0);
    auto arr = nlohmann::json::parse(to_json(std::vector<CheckReport>{r, r}));
    CHECK(arr.size() == 2);
}

TEST_CASE("text report has one summary line per check")
{
    CheckReport r;
    r.check_id = "demo";
    r.threshold = 1.0;
    r.record(0.1, "a", 1.0, 1.0);
    CHECK(to_text(r).rfind("PASS demo", 0) == 0);
}

TEST_CASE("checks are deterministic given the seed")
{
    CheckReport a = check_contiguous(Contiguous::AShift, 20, 5), b = check_contiguous(Contiguous::AShift, 20, 5);
    CHECK(a.max_rel_error == b.max_rel_error);
    CHECK(a.points_tested == b.points_tested);
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("contiguous relations hold")
{
    for (Contiguous c : {Contiguous::AUpAllUp, Contiguous::AllUpADown, Contiguous::ACross, Contiguous::AShift,
                         Contiguous::AllShift}) {
        CAPTURE(to_string(c));
        CheckReport r = check_contiguous(c, 30, 11);
        CHECK(r.passed);
        CHECK(r.points_tested == 32);
    }
}

TEST_CASE("check registry")
{
    auto names = check_names();
    CHECK(names.size() >= 10);
    CHECK(is_check_name("all"));
    CHECK(is_check_name("contiguous"));
    CHECK_FALSE(is_check_name("bogus"));
    CHECK_THROWS_AS(run_check("bogus"), Error);
    auto rs = run_check("partial-fractions");
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].passed);
}

TEST_CASE("pole-free associated draw")
{
    CDQHParams p = pole_free_associated(kDefaultSeed);
    CHECK(p.C != cplx(p.q, 0.0));
    CHECK(cf_pole_free(p));
}

TEST_CASE("orthogonality needs a converged quadrature")
{
    FamilyParams p = CDQHParams{0.5, 0.4, 0.4, 0.5, 0.4}.family();
    OrthogonalityOptions opt;
    opt.nodes = 4;
    CHECK_THROWS_AS(check_orthogonality(Family::CDQH, p, opt), Error);
    CHECK_THROWS_AS(check_orthogonality(Family::Wall, p), Error);
}
