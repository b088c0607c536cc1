#pragma once

// The eleven limit families of the associated continuous dual q-Hahn
// recurrence: closed-form solutions, explicit polynomials, continued
// fractions, weights, special identities, zeros and the limit maps
// connecting the families.

#include <functional>
#include <string>
#include <vector>

#include "qdh/cdqhahn.hpp"
#include "qdh/recurrence.hpp"

namespace qdh {

void validate_limit_params(Family f, const FamilyParams& p);

// Al-Salam-Chihara, continuous q-Hermite and continuous big q-Hermite carry
// a spectral scale gamma: z = gamma x with x = (u + 1/u)/2 and
// Lambda_+ = gamma u/2, Lambda_- = gamma/(2u).
bool has_spectral_scale(Family f);
cplx limit_gamma(Family f, const FamilyParams& p);

struct LimitPoint {
    cplx z;
    cplx gamma;
    cplx x;
    cplx u;
    cplx lambda_minus;
    cplx lambda_plus;
    Side side = Side::OffCut;
};

LimitPoint limit_point(Family f, const FamilyParams& p, cplx z, Side side = Side::OffCut);
// Point on the cut given by x in (-1,1).
LimitPoint limit_point_x(Family f, const FamilyParams& p, double x, Side side);

struct LimitSolutionInfo {
    std::string label;
    // a 2phi0 that converges only when it terminates
    bool formal = false;
};

// Labels accepted by limit_solution for this family.
std::vector<LimitSolutionInfo> limit_solution_catalog(Family f);

// Formal entries throw FormalOnly unless the series terminates.
cplx limit_solution(Family f, const FamilyParams& p, cplx z, const std::string& which, long n,
                    const TruncationPolicy& pol = {});
SolutionSequence limit_solution_sequence(Family f, const FamilyParams& p, cplx z, const std::string& which,
                                         long start, long count, const TruncationPolicy& pol = {});

enum class PolyForm {
    Standard,
    Simplified, // limit-asc1 only: single inner sum over (1/z)_j
};

// Monic P_n(z) from the explicit double sum.
cplx limit_poly(Family f, const FamilyParams& p, cplx z, long n, PolyForm form = PolyForm::Standard);

enum class LimitCfForm {
    Standard,
    Alternate, // limit-wall: 1phi1 ratio; fourth-limit: explicit power series
};

// 1/CF(z), the closed-form ratio of basic series.
cplx limit_cf(Family f, const FamilyParams& p, cplx z, LimitCfForm form = LimitCfForm::Standard,
              const TruncationPolicy& pol = {});
cplx limit_cf_at(Family f, const FamilyParams& p, const LimitPoint& pt, LimitCfForm form = LimitCfForm::Standard,
                 const TruncationPolicy& pol = {});

enum class LimitWeightForm {
    Closed,
    Stieltjes, // -gamma Im(1/CF(gamma(x+i0)))/pi
    Reduced,   // A = q: cont-q-Hermite and cont-big-q-Hermite product forms
};

// Density in x on (-1,1) for the families with a spectral scale; the
// polynomials are evaluated at z = gamma x.
double limit_weight(Family f, const FamilyParams& p, double x, LimitWeightForm form = LimitWeightForm::Closed,
                    const TruncationPolicy& pol = {});

// The two basic-series factors in the denominator of the closed weight.
std::pair<cplx, cplx> limit_weight_denominators(Family f, const FamilyParams& p, double x,
                                                const TruncationPolicy& pol = {});

// Al-Salam-Carlitz-1 at A = q: 1/CF as an explicit sum over the poles
// z = q^n and z = q^n/delta.
cplx asc1_partial_fractions(const FamilyParams& p, cplx z, const TruncationPolicy& pol = {});

struct IdentitySides {
    std::string name;
    cplx lhs;
    cplx rhs;
};

// Al-Salam-Carlitz-1 at A = q: the 3phi0 -> 1phi1 and 2phi1 -> 1phi1 forms
// of the monic polynomial, plus each against the forward recurrence.
std::vector<IdentitySides> asc1_identity_checks(const FamilyParams& p, cplx z, long n,
                                                const TruncationPolicy& pol = {});

struct ConnectionRatios {
    std::vector<cplx> first;  // Jackson J1 against the 2phi1 solution
    std::vector<cplx> second; // Jackson J2 against the minimal solution
};

// Ratios of Jackson q-Bessel functions to q-Bessel-order solutions for
// n = 0..n_max; both sequences are constant in n.
ConnectionRatios qbessel_connection(const FamilyParams& p, cplx z, long n_max, const TruncationPolicy& pol = {});

struct ZeroList {
    std::vector<double> zeros;
    std::vector<std::pair<double, double>> bracketing_intervals;
};

struct ScanOptions {
    int points = 4000;
    bool log_grid = true; // log spacing in |x|; lo and hi must share a sign
    int max_zeros = 0;    // 0 keeps all
    int max_refinements = 4;
};

// Sign changes on a grid, bisected to 1e-12. The grid is doubled until the
// zero count is stable; ScanTooCoarse if it never settles.
ZeroList find_zeros(const std::function<double(double)>& f, double lo, double hi, const ScanOptions& opt = {});

// True when the two sorted lists alternate on the range both of them cover.
bool interlaces(const std::vector<double>& a, const std::vector<double>& b);

// f_n(z) = 0phi1(-;0;q^{2n+1}/z)
double fourth_limit_f(double q, long n, double z);
// First count zeros of f_n (largest modulus first, all negative).
ZeroList fourth_limit_zeros(double q, long n, int count);

// Entire numerator and denominator of the continued fraction in a
// positive-definite regime, as real functions of z; 1/CF is num/(z den).
struct RegimePair {
    std::function<double(double)> num;
    std::function<double(double)> den;
};

// Regimes: al-salam-carlitz-1 (A < 1, A delta < 0), limit-asc1 (delta > 0),
// q-bessel (a < 0), limit-q-hermite (delta < 0).
RegimePair regime_pair(Family f, const FamilyParams& p);
bool in_positive_regime(Family f, const FamilyParams& p);

enum class LimitEdge {
    CdqhToBigQLaguerre,
    BigQLaguerreToWall,
    WallToLimitWall,
    LimitWallToFourth,
    CdqhToAlSalamChihara,
    AscToAsc1,
    Asc1ToLimitAsc1,
    AscToContQHermite,
    ContQHermiteToLimitQHermite,
    AscToContBigQHermite,
    ContBigQHermiteToQBessel,
};

struct LimitEdgeInfo {
    LimitEdge id;
    Family parent;
    Family child;
    const char* name;
    bool to_zero; // scale decreases to 0 rather than growing
};

const std::vector<LimitEdgeInfo>& limit_edges();
const LimitEdgeInfo& edge_info(LimitEdge e);

// Parent-family parameters for scale s, built from the child's parameters.
FamilyParams edge_parent_params(LimitEdge e, const FamilyParams& child, double s);

// |renormalized parent P_n - child P_n| at z for each scale.
std::vector<double> limit_convergence(LimitEdge e, const FamilyParams& child, const std::vector<double>& scales,
                                      long n, cplx z);

} // namespace qdh
