#pragma once

// Product helpers shared by the family modules.

#include <cmath>
#include <initializer_list>

#include "qdh/qseries.hpp"

namespace qdh::detail {

// prod (v)_inf over nums divided by prod (v)_inf over dens
inline cplx pinf(std::initializer_list<cplx> nums, std::initializer_list<cplx> dens, double q,
                 const TruncationPolicy& pol = {})
{
    cplx r = 1.0;
    for (auto v : nums)
        r *= qpoch_inf(v, q, pol);
    for (auto v : dens) {
        cplx d = qpoch_inf(v, q, pol);
        if (d == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "vanishing infinite product in a denominator");
        r /= d;
    }
    check_finite(r, "infinite-product prefactor overflowed");
    return r;
}

inline cplx pn(std::initializer_list<cplx> nums, std::initializer_list<cplx> dens, double q, long n)
{
    cplx r = 1.0;
    for (auto v : nums)
        r *= qpoch(v, q, n);
    for (auto v : dens) {
        cplx d = qpoch(v, q, n);
        if (d == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "vanishing q-Pochhammer symbol in a denominator");
        r /= d;
    }
    return r;
}

inline double qpow(double q, double n) { return std::pow(q, n); }

} // namespace qdh::detail
