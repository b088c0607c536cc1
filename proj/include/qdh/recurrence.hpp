#pragma once

// Three-term recurrences X_{n+1} - (z - a_n) X_n + b_n^2 X_{n-1} = 0 for the
// associated continuous dual q-Hahn family and its limit families.

#include <string>
#include <vector>

#include "qdh/qseries.hpp"

namespace qdh {

enum class Family {
    CDQH,
    BigQLaguerre,
    Wall,
    LimitWall,
    FourthLimit,
    AlSalamChihara,
    AlSalamCarlitz1,
    LimitASC1,
    ContQHermite,
    LimitQHermite,
    ContBigQHermite,
    QBesselOrder,
};

inline constexpr Family kAllFamilies[] = {
    Family::CDQH,           Family::BigQLaguerre,    Family::Wall,          Family::LimitWall,
    Family::FourthLimit,    Family::AlSalamChihara,  Family::AlSalamCarlitz1, Family::LimitASC1,
    Family::ContQHermite,   Family::LimitQHermite,   Family::ContBigQHermite, Family::QBesselOrder,
};

const char* to_string(Family f);
// Accepts the names produced by to_string (e.g. "cdqh", "fourth-limit").
Family family_from_string(const std::string& name);

// Superset of all family parameters; each family reads only its own.
struct FamilyParams {
    double q = 0.5;
    cplx A{0.0, 0.0};
    cplx B{0.0, 0.0};
    cplx C{0.0, 0.0};
    cplx D{0.0, 0.0};
    cplx delta{0.0, 0.0};
    cplx a{0.0, 0.0};
};

// Parameter names a family needs besides q, in the order A, B, C, D, delta, a.
std::vector<std::string> required_params(Family f);

struct CoefficientFamily {
    Family id = Family::CDQH;
    FamilyParams params;
    cplx z{0.0, 0.0};
};

struct Coeffs {
    cplx a;
    cplx b2;
};

Coeffs coeffs(Family f, const FamilyParams& p, long n);
inline Coeffs coeffs(const CoefficientFamily& fam, long n) { return coeffs(fam.id, fam.params, n); }

struct BirthDeathRates {
    cplx lambda;
    cplx mu;
};

// CDQH rates: lambda_n = (1-Aq^n)(1-Bq^n)/AB, mu_n = q(1-Cq^{n-1})(1-Dq^{n-1})/CD.
BirthDeathRates birth_death_rates(const FamilyParams& p, long n);

// Values X_{start}, X_{start+1}, ...; the true value at position i is
// values[i] * exp(log_scale[i]) (log_scale stays 0 unless forward_eval had
// to renormalize).
struct SolutionSequence {
    long start_index = 0;
    std::vector<cplx> values;
    std::vector<double> log_scale;
    std::string provenance;

    long end_index() const { return start_index + static_cast<long>(values.size()); }
    bool covers(long n) const { return n >= start_index && n < end_index(); }
    cplx at(long n) const;
    double log_scale_at(long n) const;
};

// Builds a sequence from closed-form values f(n), n = start..start+count-1.
template <class F>
SolutionSequence tabulate(F&& f, long start, long count, std::string provenance)
{
    SolutionSequence s;
    s.start_index = start;
    s.provenance = std::move(provenance);
    for (long n = start; n < start + count; ++n) {
        s.values.push_back(f(n));
        s.log_scale.push_back(0.0);
    }
    return s;
}

// Runs the recurrence from (X_{-1}, X_0) = (x_prev, x0) up to X_{n_max}.
// The returned sequence starts at index 0. Seeds (0, 1) give the monic P_n.
SolutionSequence forward_eval(const CoefficientFamily& fam, cplx x_prev, cplx x0, long n_max);

// Monic polynomial P_n(z), n >= 0.
cplx monic_poly(const CoefficientFamily& fam, long n);

// Coefficients of P_0..P_{n_max} in powers of z (entry [n][k] multiplies z^k).
std::vector<std::vector<cplx>> poly_coefficients(Family f, const FamilyParams& p, long n_max);

// X_{n+1} - (z - a_n) X_n + b_n^2 X_{n-1}, in units of exp(log_scale at n).
cplx residual(const CoefficientFamily& fam, const SolutionSequence& seq, long n);
// |residual| divided by the largest of the three terms.
double relative_residual(const CoefficientFamily& fam, const SolutionSequence& seq, long n);

cplx casoratian(const SolutionSequence& x, const SolutionSequence& y, long n);

// z - a_0 - b_1^2/(z - a_1 - b_2^2/(...)) evaluated bottom-up with tail 0.
cplx cf_truncated(const CoefficientFamily& fam, long depth);

struct CfResult {
    cplx value;
    long depth = 0;
    bool converged = false;
};

// Doubles the depth from start_depth until successive values agree to rel_tol.
CfResult cf_adaptive(const CoefficientFamily& fam, double rel_tol = 1e-12, long start_depth = 25,
                     long max_depth = 12800);

// |candidate_n / dominant_n| over the common index window.
std::vector<double> minimality_ratio(const SolutionSequence& candidate, const SolutionSequence& dominant);

} // namespace qdh
