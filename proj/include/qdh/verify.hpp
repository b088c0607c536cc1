#pragma once

// Property checks over seeded random draws. Each check evaluates both
// sides of an identity (or two independent routes to one quantity) and
// records the worst relative discrepancy.

#include <cstdint>
#include <string>
#include <vector>

#include "qdh/cdqhahn.hpp"
#include "qdh/limits.hpp"

namespace qdh {

struct CheckFailure {
    std::string inputs;
    cplx lhs;
    cplx rhs;
};

struct CheckReport {
    std::string check_id;
    std::uint64_t seed = 0;
    long points_tested = 0;
    double max_rel_error = 0.0;
    double threshold = 0.0;
    bool passed = true;
    std::vector<CheckFailure> failures;

    // records one comparison; err is the relative discrepancy
    void record(double err, const std::string& inputs, cplx lhs, cplx rhs);
    // a point that could not be evaluated
    void record_error(const std::string& inputs, const std::string& what);
};

std::string to_json(const CheckReport& r);
std::string to_json(const std::vector<CheckReport>& rs);
std::string to_text(const CheckReport& r);

// |lhs - rhs| / max(|lhs|, |rhs|)
double rel_diff(cplx lhs, cplx rhs);

inline constexpr std::uint64_t kDefaultSeed = 42;

// Balanced 3phi2 contiguous relations, named by the shifted functions
// (phi(a+) has a -> aq, phi_+ has every parameter times q).
enum class Contiguous {
    AUpAllUp,    // phi, phi(a+), phi_+
    AllUpADown,  // phi, phi_+(a-), phi_+
    ACross,      // phi_+(a-), phi, phi_-(a+)
    AShift,      // phi, phi(a+), phi(a-)
    AllShift,    // phi_+, phi, phi_-
};
const char* to_string(Contiguous c);

CheckReport check_contiguous(Contiguous rel, int samples = 100, std::uint64_t seed = kDefaultSeed, double q = 0.5);
// X1Plus, X4, X2 relation for n = 0..10 at off-cut points.
CheckReport check_three_term_transform(int samples = 100, std::uint64_t seed = kDefaultSeed);
// C = q: X2 two-term form, single 3phi2 form, dual q-Hahn proportionality.
CheckReport check_c_eq_q_reduction(int samples = 20, std::uint64_t seed = kDefaultSeed);

enum class Quadrature { GaussLegendre, CosMidpoint };

struct OrthogonalityOptions {
    int n_max = 6;
    int nodes = 2000; // doubled once to confirm convergence
    double threshold = 1e-6;
};

// Gram matrix of monic P_0..P_n_max against the closed weight, by both
// quadratures. Families: cdqh, al-salam-chihara, cont-q-hermite,
// cont-big-q-hermite. QuadratureNotConverged if doubling the nodes moves
// the normalized Gram matrix by more than the threshold.
CheckReport check_orthogonality(Family f, const FamilyParams& p, const OrthogonalityOptions& opt = {});

// real part of 1/CF keeps its sign on both real half-lines outside the
// cut, so the measure has no point masses there
bool cf_pole_free(const CDQHParams& p, double x_max = 1e4, int points = 4000);
// first pole-free draw with C != q, starting from A=B=D=0.4, C=0.7, q=0.5
CDQHParams pole_free_associated(std::uint64_t seed = kDefaultSeed);

// S4 permutations of (A,B,C,D) on the explicit polynomial and u <-> 1/u on
// the symmetric double sum.
CheckReport check_symmetries(const CDQHParams& p, int n_max = 8, int points = 6,
                             std::uint64_t seed = kDefaultSeed);

// Every limit edge: deviation of P_3 decreases at each scale step; n = 0
// deviation is exactly 0.
CheckReport check_limits_all(const std::vector<double>& grow = {1e2, 1e3, 1e4},
                             const std::vector<double>& shrink = {1e-2, 1e-3, 1e-4});

// Recurrence residuals of every closed-form solution, n = 1..25.
CheckReport check_solutions(Family f, int samples = 20, std::uint64_t seed = kDefaultSeed);
// 1/CF: minimal solution against the truncated fraction, the two ratio
// forms, and the C = q forms.
CheckReport check_pincherle(int points = 10, std::uint64_t seed = kDefaultSeed);
// explicit double sums against the forward recurrence, n <= 10
CheckReport check_explicit_poly(int samples = 10, std::uint64_t seed = kDefaultSeed);
CheckReport check_generating_function(int samples = 10, std::uint64_t seed = kDefaultSeed);
// C = q weight forms on 50 points; A = q reductions of the limit weights.
CheckReport check_weight_reductions(std::uint64_t seed = kDefaultSeed);
CheckReport check_transform(TransformId id, int samples = 100, std::uint64_t seed = kDefaultSeed);
// al-salam-carlitz-1 at A = q: 3phi0 and 2phi1 forms against 1phi1
CheckReport check_asc1_identities(int samples = 100, std::uint64_t seed = kDefaultSeed);
// limit-family explicit polynomials and closed-form continued fractions
CheckReport check_limit_poly(int samples = 10, std::uint64_t seed = kDefaultSeed);
CheckReport check_limit_cf(int samples = 10, std::uint64_t seed = kDefaultSeed);
// fourth-limit zeros for q in {0.3, 0.5, 0.8}, n in {-1..2}; regime pairs
CheckReport check_fourth_limit_zeros(int count = 8);
CheckReport check_regime_interlacing();
CheckReport check_partial_fractions(int points = 10);
CheckReport check_qbessel_connection(long n_max = 10);

// Named groups for the command line: contiguous, three-term, c-eq-q,
// orthogonality, symmetries, limits, solutions, pincherle, explicit-poly,
// generating-function, weights, transforms, zeros, partial-fractions,
// qbessel, limit-poly, limit-cf.
std::vector<std::string> check_names();
bool is_check_name(const std::string& name);
// name or "all"; groups run in parallel, reports come back in name order
std::vector<CheckReport> run_check(const std::string& name, std::uint64_t seed = kDefaultSeed);

} // namespace qdh
