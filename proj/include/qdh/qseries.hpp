#pragma once

// q-Pochhammer symbols and basic hypergeometric series r_phi_s with
// truncation control, plus convergent representations obtained from the
// standard transformation formulas.

#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "qdh/error.hpp"

namespace qdh {

using cplx = std::complex<double>;

// index value meaning n = infinity in qpoch
inline constexpr long kInf = std::numeric_limits<long>::max();

// Base 0 < q < 1. Complex bases are not representable by construction.
class QBase {
public:
    explicit QBase(double q);
    double value() const noexcept { return q_; }
    operator double() const noexcept { return q_; }

private:
    double q_;
};

struct TruncationPolicy {
    double rel_tol = 1e-12;
    int max_terms = 5000;

    void validate() const;
};

struct SeriesSpec {
    std::vector<cplx> num;
    std::vector<cplx> den;
    double q = 0.5;
    cplx z{0.0, 0.0};
};

// Value of a series with its cancellation estimate cond = max|term|/|sum|.
// Sums that cancel badly are redone in wide precision (cond is still the
// double-precision figure). The number represented is
// value * exp(log_scale); log_scale is 0 unless that is outside double range.
struct SeriesValue {
    cplx value{0.0, 0.0};
    double cond = 1.0;
    int terms = 0;
    std::string route = "direct";
    double log_scale = 0.0;
};

// value * exp(log_scale); Overflow if that is not representable.
cplx unscaled(const SeriesValue& v);

void check_base(double q);
void check_finite(cplx v, const char* where);

cplx qpoch(cplx a, double q, long n, const TruncationPolicy& pol = {});
cplx qpoch_inf(cplx a, double q, const TruncationPolicy& pol = {});
cplx qpoch_multi(const std::vector<cplx>& params, double q, long n, const TruncationPolicy& pol = {});

// Smallest m with |p - q^{-m}| < 1e-13 q^{-m} over numerator parameters, or -1.
long termination_index(const std::vector<cplx>& num, double q, int max_terms);

// Direct summation of the defining series.
SeriesValue phi_eval(const SeriesSpec& spec, const TruncationPolicy& pol = {});
cplx phi(const SeriesSpec& spec, const TruncationPolicy& pol = {});

// Balanced 3phi2(a,b,c;d,e;de/abc), continued by the two balanced
// transformations when the direct series diverges or cancels badly.
SeriesValue phi32_balanced(cplx a, cplx b, cplx c, cplx d, cplx e, double q,
                           const TruncationPolicy& pol = {});
cplx phi32(cplx a, cplx b, cplx c, cplx d, cplx e, double q, const TruncationPolicy& pol = {});

// 2phi1(a,b;c;z) via Heine, Jackson and the large-|z| connection formula.
SeriesValue phi21_cont(cplx a, cplx b, cplx c, cplx z, double q, const TruncationPolicy& pol = {});

// General entry point: picks the best available representation of the
// series described by spec (direct, or one of the transformations known
// for its shape).
SeriesValue phi_best(const SeriesSpec& spec, const TruncationPolicy& pol = {});
cplx phi_auto(const std::vector<cplx>& num, const std::vector<cplx>& den, double q, cplx z,
              const TruncationPolicy& pol = {});

enum class TransformId {
    BalancedEA,   // balanced 3phi2 -> 3phi2 with argument e/a
    BalancedB,    // balanced 3phi2 -> 3phi2 with argument b
    Heine,        // 2phi1 -> 2phi1 with argument b
    Jackson,      // 2phi1 -> 2phi2
    ConfluentB0,  // (z)/(az) 2phi1(a,0;c;z) = 1phi2(a;c,az;cz)
    ConfluentB0Phi11, // (z)/(az) 2phi1(a,0;c;z) = 1phi1(z;az;c)/(c)_inf
    Phi11Swap,    // 1phi1(c/b;c;bz) = (bz,c)_inf ratio 1phi1(z;bz;c)
    Phi11Zero,    // 1phi1(0;c;z) = (z)/(c) 1phi1(0;z;c)
    Phi01ToPhi11, // 0phi1(-;c;cz) = 1phi1(z;0;c)/(c)_inf
    QBinomial,    // 1phi0(a;-;z) = (az)_inf/(z)_inf
};

struct TransformSides {
    cplx lhs;
    cplx rhs;
};

// Parameters are read positionally from p: see the README for the layout
// of each identity.
TransformSides transform_check(TransformId id, const std::vector<cplx>& p, double q,
                               const TruncationPolicy& pol = {});
const char* to_string(TransformId id);

} // namespace qdh
