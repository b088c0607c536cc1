#pragma once

// Associated continuous dual q-Hahn polynomials: spectral variables,
// closed-form solutions of the recurrence, the minimal solution, the
// continued fraction, the weight function and explicit polynomial formulas.

#include <optional>
#include <vector>

#include "qdh/qseries.hpp"
#include "qdh/recurrence.hpp"

namespace qdh {

struct CDQHParams {
    double q = 0.5;
    cplx A{0.3, 0.0};
    cplx B{0.3, 0.0};
    cplx C{0.3, 0.0};
    cplx D{0.3, 0.0};

    void validate() const;
    FamilyParams family() const;
    CoefficientFamily at(cplx z) const { return {Family::CDQH, family(), z}; }
};

// Boundary values on the cut: AbovePlus is x + i0 (u = e^{i theta}),
// BelowMinus is x - i0 (u = e^{-i theta}).
enum class Side { OffCut, AbovePlus, BelowMinus };

// u with x = (u + 1/u)/2 and |u| >= 1; on the cut the side picks the root.
cplx joukowski_u(cplx x, Side side);

struct SpectralPoint {
    cplx z;
    cplx alpha;
    cplx x;
    cplx u;
    cplx lambda_minus;
    cplx lambda_plus;
    Side side = Side::OffCut;
};

// alpha = sqrt(ABCD/q)/2, principal root
cplx cdqh_alpha(const CDQHParams& p);

SpectralPoint spectral_point(const CDQHParams& p, cplx z, Side side = Side::OffCut);
// Point with x = alpha z given directly (x real in (-1,1) for the cut sides).
SpectralPoint spectral_point_x(const CDQHParams& p, cplx x, Side side = Side::OffCut);

enum class Solution { X1Minus, X1Plus, X2, X3, X4, X5, X6 };
const char* to_string(Solution s);

cplx solution(const CDQHParams& p, const SpectralPoint& pt, Solution which, long n,
              const TruncationPolicy& pol = {});
SolutionSequence solution_sequence(const CDQHParams& p, const SpectralPoint& pt, Solution which, long start,
                                   long count, const TruncationPolicy& pol = {});
cplx minimal_solution(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol = {});

// X6_n / X4_n, independent of n.
cplx x6_over_x4(const CDQHParams& p, const SpectralPoint& pt, const TruncationPolicy& pol = {});

// The two sides of the linear relation between X1Plus, X4 and X2 with
// infinite-product coefficients.
struct RelationSides {
    cplx lhs;
    cplx rhs;
};
RelationSides three_term_relation(const CDQHParams& p, const SpectralPoint& pt, long n,
                                  const TruncationPolicy& pol = {});

enum class CfForm {
    Pincherle,    // X0/(b0^2 X_{-1}) from the minimal solution
    Ratio,        // ratio of balanced 3phi2's in lambda_-
    RatioAlt,     // same ratio with denominators written through lambda_+
    CeqQ,         // C = q: single 3phi2
    CeqQProducts, // C = q: infinite products times a 3phi2 at argument q
};

// 1/CF(z) off the cut.
cplx cf_stieltjes(const CDQHParams& p, const SpectralPoint& pt, CfForm form = CfForm::Ratio,
                  const TruncationPolicy& pol = {});

enum class WeightForm {
    Closed,     // products over the two 3phi2 boundary values
    Casoratian, // boundary values of the minimal solution
    Stieltjes,  // -Im(1/CF(x+i0))/(pi alpha)
    CeqQ,       // C = q closed product form
};

// Density in x on (-1,1); orthogonality is int P_m(x/alpha) P_n(x/alpha) w(x) dx.
double weight(const CDQHParams& p, double x, WeightForm form = WeightForm::Closed,
              const TruncationPolicy& pol = {});

// Monic P_n(z) from the double sum in u; u overrides the point's u when given.
cplx explicit_poly(const CDQHParams& p, const SpectralPoint& pt, long n, std::optional<cplx> u = std::nullopt);
// Alternative double sum symmetric in u <-> 1/u.
cplx explicit_poly_ir(const CDQHParams& p, const SpectralPoint& pt, long n, std::optional<cplx> u = std::nullopt);

// Taylor coefficients of G(x,t), built from the first-order recursion for
// f_n; coefficient n equals (2 alpha)^n P_n / ((A)_n (D)_n).
std::vector<cplx> genfun_coeffs(const CDQHParams& p, const SpectralPoint& pt, long n_max);
// C = q: Taylor coefficients of (ct)_inf/(tu)_inf 2phi1(au, bu; ab; t/u);
// coefficient n equals (2 alpha)^n P_n / ((A)_n (q)_n).
std::vector<cplx> genfun_ceqq_coeffs(const CDQHParams& p, const SpectralPoint& pt, long n_max);

enum class DualQHahnForm {
    Monic,       // (A,B)_n/(AB)^n 3phi2(q^{-n}, ABu/2alpha, AB/(2alpha u); A, B; q), equal to P_n
    AskeyWilson, // (AB/D)^{-n/2} (A,B)_n 3phi2(...), equal to (2 alpha)^n P_n
};

// Requires C = q.
cplx dual_qhahn_reduction(const CDQHParams& p, const SpectralPoint& pt, long n,
                          DualQHahnForm form = DualQHahnForm::AskeyWilson);

// X2 written as two 3phi2's at argument q (any C).
cplx x2_two_term(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol = {});
// Requires C = q: X2 as a single terminating 3phi2 with product prefactor.
cplx x2_ceqq(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol = {});

} // namespace qdh
