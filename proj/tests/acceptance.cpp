// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qdh/verify.hpp"

using namespace qdh;

namespace {

struct Criterion {
    int number;
    const char* name;
    std::vector<const char*> groups;
    double seconds_limit;
};

const std::vector<Criterion> kCriteria = {
    {1, "solution-residuals", {"solutions"}, 60},
    {2, "pincherle", {"pincherle"}, 60},
    {3, "explicit-polynomials", {"explicit-poly", "symmetries"}, 60},
    {4, "generating-function", {"generating-function"}, 60},
    {5, "weight-reductions", {"weights"}, 60},
    {6, "orthogonality", {"orthogonality"}, 300},
    {7, "contiguous-relations", {"contiguous", "three-term"}, 60},
    {8, "transformations", {"transforms"}, 60},
    {9, "zero-interlacing", {"zeros"}, 60},
    {10, "partial-fractions", {"partial-fractions"}, 60},
    {11, "limit-dag", {"limits"}, 60},
    {12, "qbessel-connection", {"qbessel"}, 60},
};

} // namespace

int main()
{
    int failed = 0;
    for (const auto& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckReport> reports;
        std::string error;
        try {
            for (const char* g : c.groups)
                for (auto& r : run_check(g))
                    reports.push_back(std::move(r));
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        bool ok = error.empty() && !reports.empty() && secs <= c.seconds_limit;
        long points = 0;
        std::string worst;
        double worst_ratio = -1;
        for (const auto& r : reports) {
            ok = ok && r.passed;
            points += r.points_tested;
            double ratio = r.threshold > 0 ? r.max_rel_error / r.threshold : r.max_rel_error;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                char buf[160];
                std::snprintf(buf, sizeof buf, "%s err=%.3g tol=%.3g", r.check_id.c_str(), r.max_rel_error,
                              r.threshold);
                worst = buf;
            }
        }
        std::printf("%s %d %s checks=%zu points=%ld worst=[%s] time=%.1fs%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.name, reports.size(), points, worst.c_str(), secs, error.empty() ? "" : " error=",
                    error.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failed;
            for (const auto& r : reports)
                if (!r.passed)
                    std::printf("  %s", to_text(r).c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
