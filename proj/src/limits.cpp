#include "qdh/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "products.hpp"
#include "wide.hpp"

namespace qdh {

using detail::pinf;
using detail::pn;
using detail::qpow;

namespace {

constexpr double kPi = std::numbers::pi;

cplx ser(std::vector<cplx> num, std::vector<cplx> den, double q, cplx z, const TruncationPolicy& pol)
{
    return unscaled(phi_best(SeriesSpec{std::move(num), std::move(den), q, z}, pol));
}

// 2phi0-type series that only make sense when they terminate
cplx formal_ser(std::vector<cplx> num, std::vector<cplx> den, double q, cplx z, const TruncationPolicy& pol,
                const std::string& label)
{
    if (termination_index(num, q, pol.max_terms) < 0)
        throw Error(ErrorKind::FormalOnly, label + " is a nonterminating divergent series here");
    return phi_eval(SeriesSpec{std::move(num), std::move(den), q, z}, pol).value;
}

cplx sign(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// q^{e}, e given as a real exponent (e.g. n(n-1)/2)
double qe(double q, double e) { return std::pow(q, e); }

double tri(long n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

bool equals_q(cplx v, double q) { return std::abs(v - q) <= 1e-14 * q; }

void require_nonzero(cplx v, const char* name)
{
    if (v == cplx{0.0, 0.0})
        throw Error(ErrorKind::InvalidArgument, std::string("parameter ") + name + " must be nonzero");
}

void require_finite(cplx v, const char* name)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(ErrorKind::InvalidArgument, std::string("parameter ") + name + " must be finite");
}

double real_weight(cplx w)
{
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw Error(ErrorKind::PoleOnSupport, "weight is singular at this point");
    if (std::abs(w.imag()) > 1e-10 * std::max(std::abs(w), 1e-300) && std::abs(w.imag()) > 1e-300)
        throw Error(ErrorKind::NonRealResult, "weight has a non-negligible imaginary part");
    return w.real();
}

cplx ratio_or_pole(cplx num, cplx den)
{
    if (den == cplx{0.0, 0.0})
        throw Error(ErrorKind::PoleHit, "continued fraction has a pole at this point");
    cplx r = num / den;
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw Error(ErrorKind::PoleHit, "continued fraction has a pole at this point");
    return r;
}

// any root u of x = (u + 1/u)/2; the explicit polynomials are symmetric in u <-> 1/u
cplx any_u(cplx x)
{
    cplx u = x + std::sqrt(x * x - 1.0);
    if (std::abs(u) < 1.0)
        u = 1.0 / u;
    return u;
}

} // namespace

void validate_limit_params(Family f, const FamilyParams& p)
{
    check_base(p.q);
    for (const auto& name : required_params(f)) {
        cplx v = name == "A" ? p.A : name == "B" ? p.B : name == "C" ? p.C : name == "D" ? p.D
               : name == "delta" ? p.delta : p.a;
        require_finite(v, name.c_str());
        require_nonzero(v, name.c_str());
    }
}

bool has_spectral_scale(Family f)
{
    return f == Family::AlSalamChihara || f == Family::ContQHermite || f == Family::ContBigQHermite;
}

cplx limit_gamma(Family f, const FamilyParams& p)
{
    validate_limit_params(f, p);
    const double q = p.q;
    switch (f) {
    case Family::AlSalamChihara: return 2.0 * std::sqrt(q / (p.A * p.B * p.delta));
    case Family::ContQHermite: return 2.0 * std::sqrt(q / (p.A * p.delta));
    case Family::ContBigQHermite: return 2.0 * std::sqrt(p.a * q / p.A);
    default: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, std::string(to_string(f)) + " has no spectral scale");
}

LimitPoint limit_point(Family f, const FamilyParams& p, cplx z, Side side)
{
    LimitPoint pt;
    pt.z = z;
    pt.side = side;
    if (!has_spectral_scale(f))
        return pt;
    pt.gamma = limit_gamma(f, p);
    pt.x = z / pt.gamma;
    pt.u = joukowski_u(pt.x, side);
    pt.lambda_plus = pt.gamma * pt.u / 2.0;
    pt.lambda_minus = pt.gamma / (2.0 * pt.u);
    return pt;
}

LimitPoint limit_point_x(Family f, const FamilyParams& p, double x, Side side)
{
    cplx g = limit_gamma(f, p);
    LimitPoint pt = limit_point(f, p, g * x, side);
    pt.x = x;
    return pt;
}

std::vector<LimitSolutionInfo> limit_solution_catalog(Family f)
{
    switch (f) {
    case Family::BigQLaguerre: return {{"L1"}, {"L2"}, {"L3"}, {"L4"}, {"L5"}};
    case Family::Wall: return {{"W1"}, {"W2"}, {"W3"}, {"W4", true}};
    case Family::LimitWall: return {{"U1"}, {"U2"}, {"U3", true}};
    case Family::FourthLimit: return {{"V1"}, {"V2", true}};
    case Family::AlSalamChihara: return {{"Q1-"}, {"Q1+"}, {"Q2"}, {"Q3"}, {"Q4"}};
    case Family::AlSalamCarlitz1: return {{"R1"}, {"R2"}, {"R3"}, {"R4"}};
    case Family::LimitASC1: return {{"S1"}, {"S2"}, {"S3"}, {"S4"}};
    case Family::ContQHermite: return {{"H1-"}, {"H1+"}, {"H2", true}};
    case Family::LimitQHermite: return {{"T1"}};
    case Family::ContBigQHermite: return {{"C1-"}, {"C1+"}, {"C2"}, {"C3", true}, {"C4"}};
    case Family::QBesselOrder: return {{"B1"}, {"B1b"}, {"B2"}, {"B3", true}};
    case Family::CDQH: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, "cdqh solutions live in the cdqhahn module");
}

namespace {

// value m * exp(ls); keeps prefactors such as q^{n^2} from underflowing
struct Sc {
    cplx m{1.0, 0.0};
    double ls = 0.0;
};

Sc norm(Sc r)
{
    double mag = std::abs(r.m);
    if (mag > 0.0 && std::isfinite(mag) && (mag > 1e50 || mag < 1e-50)) {
        r.ls += std::log(mag);
        r.m /= mag;
    }
    return r;
}

Sc operator*(Sc a, Sc b) { return norm({a.m * b.m, a.ls + b.ls}); }
Sc operator/(Sc a, Sc b) { return norm({a.m / b.m, a.ls - b.ls}); }
Sc operator*(Sc a, cplx b) { return norm({a.m * b, a.ls}); }
Sc operator*(cplx b, Sc a) { return norm({a.m * b, a.ls}); }

Sc spow(cplx b, double e)
{
    if (b == cplx{0.0, 0.0})
        return e == 0.0 ? Sc{} : Sc{0.0, 0.0};
    return {std::polar(1.0, e * std::arg(b)), e * std::log(std::abs(b))};
}

Sc sq(double q, double e) { return {1.0, e * std::log(q)}; }

Sc sser(std::vector<cplx> num, std::vector<cplx> den, double q, cplx z, const TruncationPolicy& pol)
{
    SeriesValue v = phi_best(SeriesSpec{std::move(num), std::move(den), q, z}, pol);
    return norm({v.value, v.log_scale});
}

cplx value(Sc v) { return v.ls == 0.0 ? v.m : v.m * std::exp(v.ls); }

Sc solution_scaled(Family f, const FamilyParams& p, cplx z, const std::string& which, long n,
                   const TruncationPolicy& pol)
{
    validate_limit_params(f, p);
    const double q = p.q;
    const double qn = qpow(q, static_cast<double>(n));
    const double q1n = q / qn; // q^{1-n}
    const double nd = static_cast<double>(n);
    const cplx A = p.A, B = p.B, C = p.C, dl = p.delta, a = p.a;
    auto bad = [&]() -> Sc {
        throw Error(ErrorKind::InvalidArgument, "unknown solution '" + which + "' for " + to_string(f));
    };
    switch (f) {
    case Family::BigQLaguerre:
        if (which == "L1")
            return sign(n) * sq(q, 0.5 * n * (n + 1)) / spow(A * B * C * z, nd) *
                   pn({A, B, C}, {q / (A * z)}, q, n) *sser({B * qn, C * qn}, {qn * q / (A * z)}, q, q / (B * C * z), pol);
        if (which == "L2")
            return sign(n) * sq(q, tri(n)) * pn({A}, {}, q, n) * spow(A, -nd) *
                  sser({A * qn, q / (B * C * z)}, {A * q / B, A * q / C}, q, A * z * q1n, pol);
        if (which == "L3")
            return sign(n) * sq(q, tri(n)) * pn({B}, {}, q, n) * spow(B, -nd) *
                  sser({B * qn, q / (A * C * z)}, {B * q / C, B * q / A}, q, B * z * q1n, pol);
        if (which == "L4")
            return sign(n) * sq(q, tri(n)) * pn({C}, {}, q, n) * spow(C, -nd) *
                  sser({C * qn, q / (A * B * z)}, {C * q / A, C * q / B}, q, C * z * q1n, pol);
        if (which == "L5")
            return spow(z, nd) * pn({1.0 / (C * z)}, {}, q, n) *
                  sser({q1n / A, q1n / B}, {C * z * q1n}, q, C * qn, pol);
        return bad();
    case Family::Wall:
        if (which == "W1")
            return spow(q / (A * B * z), nd) * sq(q, 2.0 * tri(n)) *
                   pn({A, B}, {q / (A * z)}, q, n) *sser({B * qn}, {qn * q / (A * z)}, q, qn * q / (B * z), pol);
        if (which == "W2")
            return sign(n) * sq(q, tri(n)) * pn({A}, {}, q, n) * spow(A, -nd) *
                  sser({A * qn}, {A * q / B}, q, A * z * q1n, pol);
        if (which == "W3")
            return sign(n) * sq(q, tri(n)) * pn({B}, {}, q, n) * spow(B, -nd) *
                  sser({B * qn}, {B * q / A}, q, B * z * q1n, pol);
        if (which == "W4")
            return spow(z, nd) *
                   formal_ser({q1n / A, q1n / B}, {}, q, qn * qn / (q * z), pol, which);
        return bad();
    case Family::LimitWall:
        if (which == "U1")
            return sign(n) * spow(q / (A * z), nd) * sq(q, 3.0 * tri(n)) *
                   pn({A}, {q / (A * z)}, q, n) *sser({}, {qn * q / (A * z)}, q, qn * qn * q / z, pol);
        if (which == "U2")
            return sign(n) * sq(q, tri(n)) * pn({A}, {}, q, n) * spow(A, -nd) *
                  sser({A * qn}, {0.0}, q, A * z * q1n, pol);
        if (which == "U3")
            return spow(z, nd) * formal_ser({q1n / A, 0.0}, {}, q, qn * qn / (q * z), pol, which);
        return bad();
    case Family::FourthLimit:
        if (which == "V1")
            return sq(q, 4.0 * tri(n)) * spow(q / z, nd) *
                  sser({}, {0.0}, q, qn * qn * q / z, pol);
        if (which == "V2")
            return spow(z, nd) * formal_ser({0.0, 0.0}, {}, q, qn * qn / (q * z), pol, which);
        return bad();
    case Family::AlSalamChihara: {
        LimitPoint pt = limit_point(f, p, z);
        const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
        auto q1 = [&](cplx l) {
            return pn({A, B}, {A * B * l}, q, n) * spow(l, nd) *
                  sser({B * l, B * qn}, {A * B * l * qn}, q, A * dl * l, pol);
        };
        if (which == "Q1-")
            return q1(lm);
        if (which == "Q1+")
            return q1(lp);
        if (which == "Q2")
            return pn({B}, {}, q, n) * spow(B, -nd) *
                  sser({B * lp, B * lm}, {q / dl}, q, q1n / B, pol);
        if (which == "Q3")
            return pn({B}, {}, q, n) * spow(dl * B, -nd) *
                  sser({B * dl * lp, B * dl * lm}, {q * dl}, q, q1n / B, pol);
        if (which == "Q4")
            return spow(-q / (A * B * dl), nd) * sq(q, -tri(n)) *
                   pn({A * B * dl * lp / q, A * B * dl * lm / q}, {}, q, n) *
                  sser({q1n / A, q1n / B}, {lp * q1n, lm * q1n}, q, q / dl, pol);
        return bad();
    }
    case Family::AlSalamCarlitz1:
        if (which == "R1")
            return pn({A}, {q / (dl * z)}, q, n) * spow(-q / (A * dl * z), nd) *
                   sq(q, tri(n)) *sser({q / (A * z * dl)}, {qn * q / (z * dl)}, q, qn * q / z, pol);
        if (which == "R2")
            return sign(n) * sq(q, tri(n)) *sser({q / (A * z * dl)}, {q / dl}, q, z * q1n, pol);
        if (which == "R3")
            return spow(-dl, -nd) * sq(q, tri(n)) *
                  sser({q / (A * z)}, {q * dl}, q, dl * z * q1n, pol);
        if (which == "R4")
            return pn({1.0 / z}, {}, q, n) * spow(z, nd) *
                  sser({q1n / A}, {z * q1n}, q, q / dl, pol);
        return bad();
    case Family::LimitASC1:
        if (which == "S1")
            return sq(q, static_cast<double>(n) * n) * pn({}, {q / (dl * z)}, q, n) *
                   spow(dl * z, -nd) *sser({0.0}, {qn * q / (z * dl)}, q, qn * q / z, pol);
        if (which == "S2")
            return sign(n) * sq(q, tri(n)) *sser({0.0}, {q / dl}, q, z * q1n, pol);
        if (which == "S3")
            return spow(-dl, -nd) * sq(q, tri(n)) *sser({0.0}, {q * dl}, q, dl * z * q1n, pol);
        if (which == "S4")
            return pn({1.0 / z}, {}, q, n) * spow(z, nd) *
                  sser({0.0}, {z * q1n}, q, q / dl, pol);
        return bad();
    case Family::ContQHermite: {
        LimitPoint pt = limit_point(f, p, z);
        const cplx mp = pt.lambda_plus, mm = pt.lambda_minus;
        auto h1 = [&](cplx m) {
            return pn({A}, {}, q, n) * spow(m, nd) *sser({A * qn}, {0.0}, q, A * dl * m * m, pol);
        };
        if (which == "H1-")
            return h1(mm);
        if (which == "H1+")
            return h1(mp);
        if (which == "H2")
            return spow(mm, nd) *
                   formal_ser({q1n / A, 0.0}, {}, q, qn / (dl * mm * mm), pol, which);
        return bad();
    }
    case Family::LimitQHermite:
        if (which == "T1")
            return sign(n) * sq(q, tri(n)) * spow(q / (dl * z), nd) *
                  sser({}, {0.0}, q, qn * q * q / (dl * z * z), pol);
        return bad();
    case Family::ContBigQHermite: {
        LimitPoint pt = limit_point(f, p, z);
        const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
        auto c1 = [&](cplx l) {
            return pn({A}, {}, q, n) * spow(l, nd) *sser({A * l, A * qn}, {0.0}, q, l / a, pol);
        };
        if (which == "C1-")
            return c1(lm);
        if (which == "C1+")
            return c1(lp);
        if (which == "C2" || which == "C4")
            return spow(lp, nd) * pn({A * lm / (a * q)}, {}, q, n) *
                  sser({q1n / A, 0.0}, {lp * q1n}, q, A * lm, pol);
        if (which == "C3")
            return spow(lp, nd) *
                   formal_ser({q1n / A, lp / a}, {}, q, A * A * lm * lm * qn / (q * q * a), pol, which);
        return bad();
    }
    case Family::QBesselOrder:
        if (which == "B1")
            return spow(-a * q / z, nd) * sq(q, tri(n)) *
                  sser({a * q / z}, {0.0}, q, qn * q / z, pol);
        if (which == "B1b")
            return spow(-a * q / z, nd) * sq(q, tri(n)) * pinf({qn * q / z}, {}, q, pol) *
                  sser({}, {qn * q / z}, q, a * qn * q * q / (z * z), pol);
        if (which == "B2")
            return spow(z, nd) * pn({1.0 / z}, {}, q, n) *
                  sser({0.0, 0.0}, {z * q1n}, q, a * q / z, pol);
        if (which == "B3")
            return spow(z, nd) * formal_ser({0.0, z / a}, {}, q, a * qn / (z * z), pol, which);
        return bad();
    case Family::CDQH: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, "cdqh solutions live in the cdqhahn module");
}

} // namespace

cplx limit_solution(Family f, const FamilyParams& p, cplx z, const std::string& which, long n,
                    const TruncationPolicy& pol)
{
    return value(solution_scaled(f, p, z, which, n, pol));
}

SolutionSequence limit_solution_sequence(Family f, const FamilyParams& p, cplx z, const std::string& which,
                                         long start, long count, const TruncationPolicy& pol)
{
    SolutionSequence s;
    s.start_index = start;
    s.provenance = std::string(to_string(f)) + " " + which;
    for (long n = start; n < start + count; ++n) {
        Sc v = solution_scaled(f, p, z, which, n, pol);
        s.values.push_back(v.m);
        s.log_scale.push_back(v.ls);
    }
    return s;
}

// The double sums below cancel (about 1e7 at q = 0.8, n = 8), so they are
// accumulated in wide precision.
cplx limit_poly(Family f, const FamilyParams& p, cplx z0, long n, PolyForm form)
{
    using detail::wc;
    using detail::wide;
    validate_limit_params(f, p);
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 0");
    if (form == PolyForm::Simplified && f != Family::LimitASC1)
        throw Error(ErrorKind::InvalidArgument, "simplified form exists only for limit-asc1");
    const wide q = p.q;
    wide qmn = 1; // q^{-n}
    for (long i = 0; i < n; ++i)
        qmn /= q;
    const wc z(z0), A(p.A), B(p.B), C(p.C), dl(p.delta), a(p.a), one(1);
    const double nd = static_cast<double>(n);
    // integer powers only
    auto pw = [](wc b, double e) {
        long k = std::lround(e);
        wc r(1);
        wc x = k < 0 ? wc(1) / b : b;
        for (long m = std::labs(k); m > 0; m >>= 1, x = x * x)
            if (m & 1)
                r = r * x;
        return r;
    };
    auto qe = [&](double e) { return pw(wc(q), e); };
    auto sg = [](long k) { return wc((k % 2 == 0) ? 1 : -1); };
    auto pn = [&](std::initializer_list<wc> num, std::initializer_list<wc> den, long m) {
        wc r(1);
        wide qk = 1;
        for (long k = 0; k < m; ++k, qk *= q) {
            for (const wc& v : num)
                r = r * (one - v * wc(qk));
            for (const wc& v : den)
                r = r / (one - v * wc(qk));
        }
        return r;
    };
    // sum over l of outer(l) * (partial sum of inner(j), j <= l)
    auto double_sum = [n](auto&& outer, auto&& inner) {
        wc s(0), acc(0);
        for (long l = 0; l <= n; ++l) {
            acc = acc + inner(l);
            s = s + outer(l) * acc;
        }
        return s;
    };
    auto done = [](wc v) {
        cplx r = v.to();
        check_finite(r, "limit polynomial overflowed");
        return r;
    };
    switch (f) {
    case Family::BigQLaguerre: {
        wc S = double_sum(
            [&](long l) {
                return pn({qmn, A * B * C * z / wc(q)}, {A * B * z * wc(qmn), A, B}, l) * sg(l) * qe(tri(l)) *
                       pw(A * B / C, l);
            },
            [&](long j) {
                return pn({A / wc(q), B / wc(q), A * B * z}, {A * B * C * z / wc(q), q}, j) * sg(j) * qe(-tri(j)) *
                       pw(C * wc(q) / (A * B), j);
            });
        return done(pw(z, nd) * pn({wc(q) / (A * B * z), A, B}, {q}, n) * S);
    }
    case Family::Wall: {
        wc S = double_sum(
            [&](long l) {
                return pn({qmn}, {wc(qmn) * A * B * z, A, B}, l) * qe(2.0 * tri(l)) * pw(A * A * B * B * z / wc(q), l);
            },
            [&](long j) {
                return pn({A / wc(q), B / wc(q), A * B * z}, {q}, j) * pw(wc(q) / (A * B), 2.0 * j) * pw(z, -j) *
                       qe(-2.0 * tri(j));
            });
        return done(pw(z, nd) * pn({wc(q) / (A * B * z), A, B}, {q}, n) * S);
    }
    case Family::LimitWall: {
        wc S = double_sum([&](long l) { return pn({qmn}, {A}, l) * sg(l) * qe(-tri(l)) * pw(A * z, l); },
                          [&](long j) { return pn({A / wc(q)}, {q}, j) * qe(tri(j)) * pw(-(A * z), -j); });
        return done(qe(nd * nd) * pw(A, -nd) * pn({A}, {q}, n) * S);
    }
    case Family::FourthLimit: {
        wc S = double_sum([&](long l) { return pn({qmn}, {}, l) * qe(-2.0 * tri(l)) * pw(z, l); },
                          [&](long j) { return pn({}, {q}, j) * qe(2.0 * tri(j)) * pw(wc(q) * z, -j); });
        return done(sg(n) * qe(nd * nd + tri(n)) * pn({}, {q}, n) * S);
    }
    case Family::AlSalamChihara: {
        const cplx g0 = limit_gamma(f, p);
        const wc g(g0), u(any_u(z0 / g0)), two(2);
        wc S = double_sum(
            [&](long l) {
                return pn({qmn, two * u / (g * dl), two * u / g}, {A, B}, l) * sg(l) * pw(u, -2.0 * l) *
                       qe(nd * l - tri(l));
            },
            [&](long j) {
                return pn({A / wc(q), B / wc(q)}, {q, two * u / (g * dl), two * u / g}, j) * sg(j) * pw(u, 2.0 * j) *
                       qe(0.5 * j * (j + 1));
            });
        return done(pw(g * u / two, nd) * pn({A, B}, {q}, n) * S);
    }
    case Family::AlSalamCarlitz1: {
        wc S = double_sum(
            [&](long l) {
                return pn({qmn, one / (z * dl), one / z}, {A}, l) * qe(-2.0 * tri(l) + nd * l) *
                       pw(A * dl * z * z / wc(q), l);
            },
            [&](long j) {
                return pn({A / wc(q)}, {q, one / (z * dl), one / z}, j) * qe(static_cast<double>(j) * j) *
                       pw(A * dl * z * z, -j);
            });
        return done(pw(-(wc(q) / (A * dl * z)), nd) * pn({A}, {q}, n) * qe(tri(n)) * S);
    }
    case Family::LimitASC1: {
        if (form == PolyForm::Simplified) {
            wc S = double_sum([&](long l) { return pn({qmn, one / z}, {}, l) * pw(-(dl * z), l) * qe(-tri(l)); },
                              [&](long j) { return pn({}, {one / z, q}, j) * pw(-(z * dl), -j) * qe(tri(j)); });
            return done(pw(dl, -nd) * qe(nd * nd) * pn({}, {q}, n) * S);
        }
        wc S = double_sum(
            [&](long l) {
                return pn({qmn, one / (z * dl), one / z}, {}, l) * pw(-dl, l) * qe(-3.0 * tri(l)) * pw(z, 2.0 * l) *
                       qe(static_cast<double>(l) * (n - 1));
            },
            [&](long j) {
                return pn({}, {q, one / (z * dl), one / z}, j) * pw(z, -2.0 * j) * pw(-dl, -j) * qe(3.0 * tri(j));
            });
        return done(pw(z * dl, -nd) * qe(nd * nd) * pn({}, {q}, n) * S);
    }
    case Family::ContQHermite: {
        const cplx g0 = limit_gamma(f, p);
        const wc g(g0), u(any_u(z0 / g0)), two(2);
        wc S = double_sum(
            [&](long l) { return pn({qmn}, {A}, l) * sg(l) * pw(u, -2.0 * l) * qe(nd * l - tri(l)); },
            [&](long j) { return pn({A / wc(q)}, {q}, j) * sg(j) * pw(u, 2.0 * j) * qe(0.5 * j * (j + 1)); });
        return done(pw(g * u / two, nd) * pn({A}, {q}, n) * S);
    }
    case Family::LimitQHermite: {
        wc S = double_sum(
            [&](long l) { return pn({qmn}, {}, l) * pw(z, 2.0 * l) * qe(nd * l - 2.0 * tri(l)) * pw(dl / wc(q), l); },
            [&](long j) { return pn({}, {q}, j) * pw(z, -2.0 * j) * pw(dl, -j) * qe(static_cast<double>(j) * j); });
        return done(pw(-z, -nd) * qe(tri(n)) * pn({}, {q}, n) * pw(wc(q) / dl, nd) * S);
    }
    case Family::ContBigQHermite: {
        const cplx g0 = limit_gamma(f, p);
        const wc g(g0), u(any_u(z0 / g0)), two(2);
        wc S = double_sum(
            [&](long l) { return pn({qmn, two * u / g}, {A}, l) * sg(l) * pw(u, -2.0 * l) * qe(nd * l - tri(l)); },
            [&](long j) {
                return pn({A / wc(q)}, {q, two * u / g}, j) * sg(j) * pw(u, 2.0 * j) * qe(0.5 * j * (j + 1));
            });
        return done(pw(g * u / two, nd) * pn({A}, {q}, n) * S);
    }
    case Family::QBesselOrder: {
        wc S = double_sum(
            [&](long l) { return pn({qmn, one / z}, {}, l) * qe(-static_cast<double>(l) * l + nd * l) * pw(z * z / a, l); },
            [&](long j) { return pn({}, {q, one / z}, j) * qe(static_cast<double>(j) * j) * pw(a / (z * z), j); });
        return done(pw(-(a / z), nd) * pn({}, {q}, n) * qe(0.5 * nd * (nd + 1)) * S);
    }
    case Family::CDQH: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, "cdqh polynomials live in the cdqhahn module");
}

cplx limit_cf(Family f, const FamilyParams& p, cplx z, LimitCfForm form, const TruncationPolicy& pol)
{
    validate_limit_params(f, p);
    return limit_cf_at(f, p, limit_point(f, p, z), form, pol);
}

cplx limit_cf_at(Family f, const FamilyParams& p, const LimitPoint& pt, LimitCfForm form, const TruncationPolicy& pol)
{
    validate_limit_params(f, p);
    if (form == LimitCfForm::Alternate && f != Family::LimitWall && f != Family::FourthLimit)
        throw Error(ErrorKind::InvalidArgument, "alternate continued-fraction form exists only for limit-wall and fourth-limit");
    const double q = p.q;
    const cplx z = pt.z, A = p.A, B = p.B, C = p.C, dl = p.delta, a = p.a;
    if (z == cplx{0.0, 0.0})
        throw Error(ErrorKind::ZeroDivisor, "z must be nonzero");
    switch (f) {
    case Family::BigQLaguerre:
        return ratio_or_pole(ser({B, C}, {q / (A * z)}, q, q / (B * C * z), pol),
                             z * (1.0 - 1.0 / (A * z)) * ser({B / q, C / q}, {1.0 / (A * z)}, q, q / (B * C * z), pol));
    case Family::Wall:
        return ratio_or_pole(ser({B}, {q / (A * z)}, q, q / (B * z), pol),
                             z * (1.0 - 1.0 / (A * z)) * ser({B / q}, {1.0 / (A * z)}, q, 1.0 / (B * z), pol));
    case Family::LimitWall:
        if (form == LimitCfForm::Alternate)
            return ratio_or_pole(ser({A}, {0.0}, q, q / (A * z), pol), z * ser({A / q}, {0.0}, q, 1.0 / (A * z), pol));
        return ratio_or_pole(ser({}, {q / (A * z)}, q, q / z, pol),
                             z * (1.0 - 1.0 / (A * z)) * ser({}, {1.0 / (A * z)}, q, 1.0 / (q * z), pol));
    case Family::FourthLimit: {
        if (form == LimitCfForm::Standard)
            return ratio_or_pole(ser({}, {0.0}, q, q / z, pol), z * ser({}, {0.0}, q, 1.0 / (q * z), pol));
        // sum q^{k^2} z^{-k}/(q)_k over sum q^{k^2-2k} z^{-k}/(q)_k
        cplx s1 = 0.0, s2 = 0.0, t = 1.0;
        int small = 0;
        for (long k = 0; k < pol.max_terms; ++k) {
            if (k > 0)
                t *= 1.0 / (z * (1.0 - qpow(q, static_cast<double>(k))));
            cplx a1 = t * qe(q, static_cast<double>(k) * k);
            cplx a2 = t * qe(q, static_cast<double>(k) * k - 2.0 * k);
            s1 += a1;
            s2 += a2;
            if (std::abs(a2) < pol.rel_tol * std::abs(s2) && std::abs(a1) < pol.rel_tol * std::abs(s1)) {
                if (++small >= 3)
                    return ratio_or_pole(s1, z * s2);
            } else {
                small = 0;
            }
        }
        throw Error(ErrorKind::MaxTermsExceeded, "explicit series did not converge");
    }
    case Family::AlSalamChihara: {
        const cplx lm = pt.lambda_minus;
        return A * B * dl * lm / (q * (1.0 - A * B * lm / q)) *
               ratio_or_pole(ser({B * lm, B}, {A * B * lm}, q, A * dl * lm, pol),
                             ser({B * lm, B / q}, {A * B * lm / q}, q, A * dl * lm, pol));
    }
    case Family::AlSalamCarlitz1:
        return ratio_or_pole(ser({q / (A * z * dl)}, {q / (z * dl)}, q, q / z, pol),
                             z * (1.0 - 1.0 / (dl * z)) * ser({q / (A * z * dl)}, {1.0 / (z * dl)}, q, 1.0 / z, pol));
    case Family::LimitASC1:
        return ratio_or_pole(ser({0.0}, {q / (z * dl)}, q, q / z, pol),
                             z * (1.0 - 1.0 / (dl * z)) * ser({0.0}, {1.0 / (z * dl)}, q, 1.0 / z, pol));
    case Family::ContQHermite: {
        const cplx mm = pt.lambda_minus;
        return A * dl * mm / q *
               ratio_or_pole(ser({A}, {0.0}, q, A * dl * mm * mm, pol), ser({A / q}, {0.0}, q, A * dl * mm * mm, pol));
    }
    case Family::LimitQHermite:
        return ratio_or_pole(ser({}, {0.0}, q, q * q / (dl * z * z), pol), z * ser({}, {0.0}, q, q / (dl * z * z), pol));
    case Family::ContBigQHermite: {
        const cplx lm = pt.lambda_minus;
        return A * lm / (a * q) *
               ratio_or_pole(ser({A, A * lm}, {0.0}, q, lm / a, pol), ser({A / q, A * lm}, {0.0}, q, lm / a, pol));
    }
    case Family::QBesselOrder:
        return ratio_or_pole(ser({}, {q / z}, q, a * q * q / (z * z), pol),
                             (z - 1.0) * ser({}, {1.0 / z}, q, a * q / (z * z), pol));
    case Family::CDQH: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, "use cf_stieltjes for cdqh");
}

std::pair<cplx, cplx> limit_weight_denominators(Family f, const FamilyParams& p, double x, const TruncationPolicy& pol)
{
    if (!has_spectral_scale(f))
        throw Error(ErrorKind::UnsupportedFamily, std::string(to_string(f)) + " has no weight function here");
    if (!(x > -1.0 && x < 1.0))
        throw Error(ErrorKind::InvalidArgument, "x must lie in (-1,1)");
    LimitPoint pt = limit_point_x(f, p, x, Side::AbovePlus);
    const double q = p.q;
    const cplx A = p.A, B = p.B, dl = p.delta, a = p.a, u = pt.u;
    const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
    switch (f) {
    case Family::AlSalamChihara:
        return {ser({B * lm, B / q}, {A * B * lm / q}, q, A * dl * lm, pol),
                ser({B * lp, B / q}, {A * B * lp / q}, q, A * dl * lp, pol)};
    case Family::ContQHermite:
        return {ser({A / q}, {0.0}, q, q * u * u, pol), ser({A / q}, {0.0}, q, q / (u * u), pol)};
    case Family::ContBigQHermite:
        return {ser({A / q, A * lm}, {0.0}, q, lm / a, pol), ser({A / q, A * lp}, {0.0}, q, lp / a, pol)};
    default: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, "no weight function");
}

double limit_weight(Family f, const FamilyParams& p, double x, LimitWeightForm form, const TruncationPolicy& pol)
{
    if (!has_spectral_scale(f))
        throw Error(ErrorKind::UnsupportedFamily, std::string(to_string(f)) + " has no weight function here");
    if (!(x > -1.0 && x < 1.0))
        throw Error(ErrorKind::InvalidArgument, "x must lie in (-1,1)");
    LimitPoint pt = limit_point_x(f, p, x, Side::AbovePlus);
    const double q = p.q;
    const cplx A = p.A, B = p.B, dl = p.delta, a = p.a, u = pt.u, g = pt.gamma;
    const double edge = 2.0 * kPi * std::sqrt(1.0 - x * x);
    if (form == LimitWeightForm::Stieltjes)
        return real_weight(-g * limit_cf_at(f, p, pt, LimitCfForm::Standard, pol).imag() / kPi);
    if (form == LimitWeightForm::Reduced) {
        if (!equals_q(A, q))
            throw Error(ErrorKind::InvalidArgument, "reduced weight requires A = q");
        if (f == Family::ContQHermite)
            return real_weight(pinf({q, u * u, 1.0 / (u * u)}, {}, q, pol) / edge);
        if (f == Family::ContBigQHermite) {
            cplx sa = std::sqrt(a);
            return real_weight(pinf({q, 1.0 / (u * u), u * u}, {u / sa, 1.0 / (u * sa)}, q, pol) / edge);
        }
        throw Error(ErrorKind::UnsupportedFamily, "no reduced weight for this family");
    }
    auto [d1, d2] = limit_weight_denominators(f, p, x, pol);
    if (d1 * d2 == cplx{0.0, 0.0})
        throw Error(ErrorKind::PoleOnSupport, "weight denominator vanishes");
    cplx num;
    switch (f) {
    case Family::AlSalamChihara:
        num = pinf({A, B, 1.0 / (u * u), u * u},
                   {A * dl * g * u / 2.0, A * dl * g / (2.0 * u), A * B * g * u / (2.0 * q), A * B * g / (2.0 * q * u)}, q,
                   pol);
        break;
    case Family::ContQHermite: num = pinf({A, u * u, 1.0 / (u * u)}, {}, q, pol); break;
    default: num = pinf({A, 1.0 / (u * u), u * u}, {g * u / (2.0 * a), g / (2.0 * a * u)}, q, pol); break;
    }
    return real_weight(num / (d1 * d2) / edge);
}

cplx asc1_partial_fractions(const FamilyParams& p, cplx z, const TruncationPolicy& pol)
{
    validate_limit_params(Family::AlSalamCarlitz1, p);
    const double q = p.q;
    if (!equals_q(p.A, q))
        throw Error(ErrorKind::InvalidArgument, "partial fractions require A = q");
    const cplx dl = p.delta;
    if (std::abs(dl.imag()) <= 1e-15 * std::abs(dl) && dl.real() > 0.0) {
        double m = std::log(dl.real()) / std::log(q);
        if (std::abs(m - std::round(m)) < 1e-12)
            throw Error(ErrorKind::ResonantDelta, "delta is an integer power of q");
    }
    const cplx c1 = 1.0 / pinf({1.0 / dl}, {}, q, pol);
    const cplx c2 = 1.0 / pinf({dl}, {}, q, pol);
    cplx S = 0.0;
    cplx qq = 1.0, ddq = 1.0, dq = 1.0; // (q)_n, (delta q)_n, (q/delta)_n
    int small = 0;
    for (long n = 0; n < pol.max_terms; ++n) {
        const double qn = qpow(q, static_cast<double>(n));
        if (n > 0) {
            qq *= 1.0 - qn;
            ddq *= 1.0 - dl * qn;
            dq *= 1.0 - qn / dl;
        }
        cplx d1 = z - qn, d2 = z - qn / dl;
        if (std::abs(d1) <= 1e-13 * std::max(1.0, std::abs(z)) || std::abs(d2) <= 1e-13 * std::max(1.0, std::abs(z)))
            throw Error(ErrorKind::PoleHit, "z coincides with a pole of the continued fraction");
        cplx t = qn * c1 / (d1 * qq * ddq) + qn * c2 / (d2 * qq * dq);
        S += t;
        if (std::abs(t) < pol.rel_tol * std::abs(S)) {
            if (++small >= 3)
                return S;
        } else {
            small = 0;
        }
    }
    throw Error(ErrorKind::MaxTermsExceeded, "residue sum did not converge");
}

std::vector<IdentitySides> asc1_identity_checks(const FamilyParams& p, cplx z, long n, const TruncationPolicy& pol)
{
    validate_limit_params(Family::AlSalamCarlitz1, p);
    const double q = p.q;
    if (!equals_q(p.A, q))
        throw Error(ErrorKind::InvalidArgument, "these identities require A = q");
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    const cplx dl = p.delta;
    const double qn = qpow(q, static_cast<double>(n)), qmn = 1.0 / qn, q1n = q / qn;
    auto direct = [&](std::vector<cplx> num, std::vector<cplx> den, cplx x) {
        return phi_eval(SeriesSpec{std::move(num), std::move(den), q, x}, pol).value;
    };
    const cplx l1 = std::pow(-dl * z, -static_cast<double>(n)) * qe(q, tri(n)) *
                    direct({qmn, 1.0 / (z * dl), 1.0 / z}, {}, dl * z * z * qn);
    const cplx r1 = std::pow(z, static_cast<double>(n)) * pn({1.0 / z}, {}, q, n) * direct({qmn}, {z * q1n}, q / dl);
    const cplx l2 = std::pow(-dl, -static_cast<double>(n)) * qe(q, tri(n)) * direct({qmn, 1.0 / z}, {0.0}, q * z * dl);
    const cplx r2 = std::pow(z, static_cast<double>(n)) * pn({1.0 / (z * dl)}, {}, q, n) *
                    direct({qmn}, {q1n * z * dl}, q * dl);
    const cplx P = monic_poly({Family::AlSalamCarlitz1, p, z}, n);
    return {{"3phi0-1phi1", l1, r1}, {"2phi1-1phi1", l2, r2}, {"3phi0-recurrence", l1, P}, {"2phi1-recurrence", l2, P}};
}

ConnectionRatios qbessel_connection(const FamilyParams& p, cplx z, long n_max, const TruncationPolicy& pol)
{
    validate_limit_params(Family::QBesselOrder, p);
    if (z == cplx{0.0, 0.0})
        throw Error(ErrorKind::ZeroDivisor, "z must be nonzero");
    const double q = p.q;
    const cplx a = p.a;
    const cplx s = std::sqrt(-a * q / z); // x/2 in Jackson's notation
    const cplx qinf = qpoch_inf(q, q, pol);
    ConnectionRatios r;
    for (long n = 0; n <= n_max; ++n) {
        const double qn = qpow(q, static_cast<double>(n));
        const double nd = static_cast<double>(n);
        // J1 of order -nu-n with q^nu = 1/z, argument -x^2/4 = aq/z
        const cplx c1 = z * q / qn;
        cplx j1 = qpoch_inf(c1, q, pol) / qinf * ser({0.0, 0.0}, {c1}, q, a * q / z, pol) * std::pow(s, -nd);
        cplx b2 = sign(n) * qe(q, -tri(n)) * std::pow(s, -nd) * limit_solution(Family::QBesselOrder, p, z, "B2", n, pol);
        if (b2 == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "2phi1 solution vanishes");
        r.first.push_back(j1 / b2);
        // J2 of order nu+n
        const cplx c2 = qn * q / z;
        cplx j2 = qpoch_inf(c2, q, pol) / qinf * ser({}, {c2}, q, a * q * q * qn / (z * z), pol) * std::pow(s, nd);
        cplx b1 = sign(n) * qe(q, -tri(n)) * std::pow(z / (a * q), nd) * std::pow(s, nd) *
                  limit_solution(Family::QBesselOrder, p, z, "B1", n, pol);
        if (b1 == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "minimal solution vanishes");
        r.second.push_back(j2 / b1);
    }
    return r;
}

namespace {

std::vector<double> grid(double lo, double hi, int points, bool log_grid)
{
    std::vector<double> g(static_cast<std::size_t>(points));
    if (log_grid) {
        const double s = lo < 0.0 ? -1.0 : 1.0;
        const double l0 = std::log(std::abs(lo)), l1 = std::log(std::abs(hi));
        for (int i = 0; i < points; ++i)
            g[static_cast<std::size_t>(i)] = s * std::exp(l0 + (l1 - l0) * i / (points - 1));
    } else {
        for (int i = 0; i < points; ++i)
            g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    }
    std::sort(g.begin(), g.end());
    return g;
}

std::vector<std::pair<double, double>> brackets(const std::function<double(double)>& f, const std::vector<double>& g)
{
    std::vector<std::pair<double, double>> out;
    double x0 = g[0], f0 = f(x0);
    for (std::size_t i = 1; i < g.size(); ++i) {
        double x1 = g[i], f1 = f(x1);
        if (f0 == 0.0) {
            out.emplace_back(x0, x0);
        } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
            out.emplace_back(x0, x1);
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0)
        out.emplace_back(x0, x0);
    return out;
}

double bisect(const std::function<double(double)>& f, double lo, double hi)
{
    double flo = f(lo);
    for (int it = 0; it < 400 && hi - lo > 1e-12 * std::min(1.0, std::max(std::abs(lo), std::abs(hi))); ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

ZeroList find_zeros(const std::function<double(double)>& f, double lo, double hi, const ScanOptions& opt)
{
    if (!(lo < hi))
        throw Error(ErrorKind::InvalidArgument, "scan interval must satisfy lo < hi");
    if (opt.points < 2)
        throw Error(ErrorKind::InvalidArgument, "scan needs at least two points");
    if (opt.log_grid && (lo == 0.0 || hi == 0.0 || (lo < 0.0) != (hi < 0.0)))
        throw Error(ErrorKind::InvalidArgument, "logarithmic scan needs an interval on one side of 0");
    int points = opt.points;
    auto br = brackets(f, grid(lo, hi, points, opt.log_grid));
    bool stable = false;
    for (int r = 0; r < opt.max_refinements; ++r) {
        points *= 2;
        auto finer = brackets(f, grid(lo, hi, points, opt.log_grid));
        if (finer.size() == br.size()) {
            stable = true;
            break;
        }
        br = std::move(finer);
    }
    if (!stable)
        throw Error(ErrorKind::ScanTooCoarse, "zero count keeps changing under grid refinement");
    ZeroList out;
    for (const auto& [a, b] : br) {
        out.zeros.push_back(a == b ? a : bisect(f, a, b));
        out.bracketing_intervals.emplace_back(a, b);
    }
    if (opt.max_zeros > 0 && static_cast<int>(out.zeros.size()) > opt.max_zeros) {
        out.zeros.resize(static_cast<std::size_t>(opt.max_zeros));
        out.bracketing_intervals.resize(static_cast<std::size_t>(opt.max_zeros));
    }
    return out;
}

bool interlaces(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.empty() || b.empty())
        return false;
    const double lo = std::max(a.front(), b.front()), hi = std::min(a.back(), b.back());
    std::vector<std::pair<double, int>> m;
    for (double v : a)
        if (v >= lo && v <= hi)
            m.emplace_back(v, 0);
    for (double v : b)
        if (v >= lo && v <= hi)
            m.emplace_back(v, 1);
    if (m.size() < 2)
        return false;
    std::sort(m.begin(), m.end());
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i].second == m[i - 1].second || m[i].first == m[i - 1].first)
            return false;
    return true;
}

double fourth_limit_f(double q, long n, double z)
{
    check_base(q);
    if (z == 0.0)
        throw Error(ErrorKind::ZeroDivisor, "z must be nonzero");
    return phi_eval(SeriesSpec{{}, {0.0}, q, qpow(q, 2.0 * n + 1.0) / z}).value.real();
}

ZeroList fourth_limit_zeros(double q, long n, int count)
{
    check_base(q);
    if (count < 1)
        throw Error(ErrorKind::InvalidArgument, "count must be >= 1");
    const double s = qpow(q, 2.0 * n + 1.0);
    auto f = [&](double z) { return fourth_limit_f(q, n, z); };
    // zeros sit at z = s/w with w the (negative) zeros of 0phi1(-;0;w)
    ScanOptions opt;
    for (double wmax = 1e3; wmax < 1e60; wmax *= 1e3) {
        ZeroList zl = find_zeros(f, -s / 1e-3, -s / wmax, opt);
        if (static_cast<int>(zl.zeros.size()) >= count) {
            zl.zeros.resize(static_cast<std::size_t>(count));
            zl.bracketing_intervals.resize(static_cast<std::size_t>(count));
            return zl;
        }
        opt.points += 2000;
    }
    throw Error(ErrorKind::ScanTooCoarse, "could not bracket the requested number of zeros");
}

namespace {

// (c)_inf 1phi1(a;c;x), entire in c and x
double entire_phi11(double a, double c, double x, double q)
{
    double s = 0.0, t = 1.0; // t = (a)_k (-1)^k q^{k(k-1)/2} x^k/(q)_k
    int small = 0;
    for (long k = 0; k < 5000; ++k) {
        double tail = qpoch_inf(c * qpow(q, static_cast<double>(k)), q).real();
        double term = t * tail;
        s += term;
        if (std::abs(term) <= 1e-17 * std::abs(s) || term == 0.0) {
            if (++small >= 3)
                return s;
        } else {
            small = 0;
        }
        const double qk = qpow(q, static_cast<double>(k));
        t *= (1.0 - a * qk) * (-qk) * x / (1.0 - qk * q);
    }
    throw Error(ErrorKind::MaxTermsExceeded, "entire series did not converge");
}

// (c)_inf 0phi1(-;c;x)
double entire_phi01(double c, double x, double q)
{
    double s = 0.0, t = 1.0; // q^{k(k-1)} x^k/(q)_k
    int small = 0;
    for (long k = 0; k < 5000; ++k) {
        double term = t * qpoch_inf(c * qpow(q, static_cast<double>(k)), q).real();
        s += term;
        if (std::abs(term) <= 1e-17 * std::abs(s) || term == 0.0) {
            if (++small >= 3)
                return s;
        } else {
            small = 0;
        }
        const double qk = qpow(q, static_cast<double>(k));
        t *= qk * qk * x / (1.0 - qk * q);
    }
    throw Error(ErrorKind::MaxTermsExceeded, "entire series did not converge");
}

double realpart(cplx v, const char* name)
{
    if (std::abs(v.imag()) > 0.0)
        throw Error(ErrorKind::InvalidArgument, std::string("parameter ") + name + " must be real");
    return v.real();
}

} // namespace

bool in_positive_regime(Family f, const FamilyParams& p)
{
    auto real = [](cplx v) { return v.imag() == 0.0; };
    switch (f) {
    case Family::AlSalamCarlitz1:
        return real(p.A) && real(p.delta) && p.A.real() < 1.0 && p.A.real() * p.delta.real() < 0.0;
    case Family::LimitASC1: return real(p.delta) && p.delta.real() > 0.0;
    case Family::QBesselOrder: return real(p.a) && p.a.real() < 0.0;
    case Family::LimitQHermite: return real(p.delta) && p.delta.real() < 0.0;
    default: return false;
    }
}

RegimePair regime_pair(Family f, const FamilyParams& p)
{
    validate_limit_params(f, p);
    const double q = p.q;
    switch (f) {
    case Family::AlSalamCarlitz1:
    case Family::LimitASC1: {
        const double dl = realpart(p.delta, "delta");
        const double A = f == Family::LimitASC1 ? 0.0 : realpart(p.A, "A");
        // numerator parameter q/(A z delta); 0 in the A -> infinity limit
        auto num_par = [=](double z) { return A == 0.0 ? 0.0 : q / (A * z * dl); };
        return {[=](double z) { return entire_phi11(num_par(z), q / (z * dl), q / z, q); },
                [=](double z) { return entire_phi11(num_par(z), 1.0 / (z * dl), 1.0 / z, q); }};
    }
    case Family::QBesselOrder: {
        const double a = realpart(p.a, "a");
        return {[=](double z) { return entire_phi01(q / z, a * q * q / (z * z), q); },
                [=](double z) { return entire_phi01(1.0 / z, a * q / (z * z), q); }};
    }
    case Family::LimitQHermite: {
        const double dl = realpart(p.delta, "delta");
        return {[=](double z) { return entire_phi01(0.0, q * q / (dl * z * z), q); },
                [=](double z) { return entire_phi01(0.0, q / (dl * z * z), q); }};
    }
    default: break;
    }
    throw Error(ErrorKind::UnsupportedFamily, std::string(to_string(f)) + " has no positive-definite regime pair");
}

const std::vector<LimitEdgeInfo>& limit_edges()
{
    static const std::vector<LimitEdgeInfo> edges = {
        {LimitEdge::CdqhToBigQLaguerre, Family::CDQH, Family::BigQLaguerre, "cdqh->big-q-laguerre", false},
        {LimitEdge::BigQLaguerreToWall, Family::BigQLaguerre, Family::Wall, "big-q-laguerre->wall", false},
        {LimitEdge::WallToLimitWall, Family::Wall, Family::LimitWall, "wall->limit-wall", false},
        {LimitEdge::LimitWallToFourth, Family::LimitWall, Family::FourthLimit, "limit-wall->fourth-limit", false},
        {LimitEdge::CdqhToAlSalamChihara, Family::CDQH, Family::AlSalamChihara, "cdqh->al-salam-chihara", true},
        {LimitEdge::AscToAsc1, Family::AlSalamChihara, Family::AlSalamCarlitz1, "al-salam-chihara->al-salam-carlitz-1", false},
        {LimitEdge::Asc1ToLimitAsc1, Family::AlSalamCarlitz1, Family::LimitASC1, "al-salam-carlitz-1->limit-asc1", false},
        {LimitEdge::AscToContQHermite, Family::AlSalamChihara, Family::ContQHermite, "al-salam-chihara->cont-q-hermite", true},
        {LimitEdge::ContQHermiteToLimitQHermite, Family::ContQHermite, Family::LimitQHermite,
         "cont-q-hermite->limit-q-hermite", false},
        {LimitEdge::AscToContBigQHermite, Family::AlSalamChihara, Family::ContBigQHermite,
         "al-salam-chihara->cont-big-q-hermite", true},
        {LimitEdge::ContBigQHermiteToQBessel, Family::ContBigQHermite, Family::QBesselOrder,
         "cont-big-q-hermite->q-bessel", false},
    };
    return edges;
}

const LimitEdgeInfo& edge_info(LimitEdge e)
{
    for (const auto& i : limit_edges())
        if (i.id == e)
            return i;
    throw Error(ErrorKind::InvalidArgument, "unknown limit edge");
}

FamilyParams edge_parent_params(LimitEdge e, const FamilyParams& c, double s)
{
    FamilyParams p;
    p.q = c.q;
    switch (e) {
    case LimitEdge::CdqhToBigQLaguerre: p.A = c.A; p.B = c.B; p.C = c.C; p.D = s; break;
    case LimitEdge::BigQLaguerreToWall: p.A = c.A; p.B = c.B; p.C = s; break;
    case LimitEdge::WallToLimitWall: p.A = c.A; p.B = s; break;
    case LimitEdge::LimitWallToFourth: p.A = s; break;
    case LimitEdge::CdqhToAlSalamChihara: p.A = c.A; p.B = c.B; p.C = s; p.D = c.delta * s; break;
    case LimitEdge::AscToAsc1: p.A = c.A; p.B = s; p.delta = c.delta; break;
    case LimitEdge::Asc1ToLimitAsc1: p.A = s; p.delta = c.delta; break;
    case LimitEdge::AscToContQHermite: p.A = c.A; p.B = s; p.delta = c.delta; break;
    case LimitEdge::ContQHermiteToLimitQHermite: p.A = s; p.delta = c.delta; break;
    case LimitEdge::AscToContBigQHermite: p.A = c.A; p.B = s; p.delta = 1.0 / (c.a * s); break;
    case LimitEdge::ContBigQHermiteToQBessel: p.A = s; p.a = c.a; break;
    }
    return p;
}

std::vector<double> limit_convergence(LimitEdge e, const FamilyParams& child, const std::vector<double>& scales,
                                      long n, cplx z)
{
    const LimitEdgeInfo& info = edge_info(e);
    const cplx target = limit_poly(info.child, child, z, n);
    std::vector<double> out;
    for (double s : scales) {
        FamilyParams pp = edge_parent_params(e, child, s);
        cplx v;
        if (e == LimitEdge::CdqhToAlSalamChihara)
            v = std::pow(s, static_cast<double>(n)) * monic_poly({info.parent, pp, z / s}, n);
        else if (e == LimitEdge::AscToContQHermite)
            v = std::pow(s, 0.5 * n) * monic_poly({info.parent, pp, z / std::sqrt(s)}, n);
        else
            v = monic_poly({info.parent, pp, z}, n);
        double d = std::abs(v - target);
        if (!std::isfinite(d))
            throw Error(ErrorKind::Overflow, "renormalized parent value overflowed");
        out.push_back(d);
    }
    return out;
}

} // namespace qdh
