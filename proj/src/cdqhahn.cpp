#include "qdh/cdqhahn.hpp"

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

bool equals_q(cplx v, double q) { return std::abs(v - q) <= 1e-14 * q; }

void require_ceqq(const CDQHParams& p)
{
    if (!equals_q(p.C, p.q))
        throw Error(ErrorKind::InvalidArgument, "this form requires C = q");
}

// 3phi2(BC l, B q^s, C q^s; BCD l q^s, ABC l q^s; AD l), the series in the
// minimal solution at index n = s.
cplx x1_series(const CDQHParams& p, cplx l, long s, const TruncationPolicy& pol)
{
    const double qs = qpow(p.q, s);
    return phi32(p.B * p.C * l, p.B * qs, p.C * qs, p.B * p.C * p.D * l * qs, p.A * p.B * p.C * l * qs, p.q, pol);
}

// lambda X_{-1} with the (A,B,C,D)_{-1} factor removed
cplx y_minus1(const CDQHParams& p, cplx l, const TruncationPolicy& pol)
{
    const double q = p.q;
    return (1.0 - p.B * p.C * p.D * l / q) * (1.0 - p.A * p.B * p.C * l / q) / l * x1_series(p, l, -1, pol);
}

cplx sqrt1mx2(double x) { return std::sqrt(1.0 - x * x); }

double real_weight(cplx w)
{
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw Error(ErrorKind::PoleOnSupport, "weight is singular at this point");
    if (std::abs(w.imag()) > 1e-10 * std::max(std::abs(w), 1e-300) && std::abs(w.imag()) > 1e-300)
        throw Error(ErrorKind::NonRealResult, "weight has a non-negligible imaginary part");
    return w.real();
}

} // namespace

void CDQHParams::validate() const
{
    check_base(q);
    if (A * B * C * D == cplx{0.0, 0.0})
        throw Error(ErrorKind::InvalidArgument, "ABCD must be nonzero");
}

FamilyParams CDQHParams::family() const
{
    FamilyParams f;
    f.q = q;
    f.A = A;
    f.B = B;
    f.C = C;
    f.D = D;
    return f;
}

cplx joukowski_u(cplx x, Side side)
{
    if (side == Side::OffCut) {
        cplx s = std::sqrt(x * x - 1.0);
        cplx u1 = x + s, u2 = x - s;
        cplx u = std::abs(u1) >= std::abs(u2) ? u1 : u2;
        if (std::abs(std::abs(u) - 1.0) < 1e-12)
            throw Error(ErrorKind::BranchAmbiguous, "point lies on the cut; choose a side");
        return u;
    }
    if (std::abs(x.imag()) > 1e-12 || !(std::abs(x.real()) < 1.0))
        throw Error(ErrorKind::InvalidArgument, "cut boundary values need real x in (-1,1)");
    const double th = std::acos(x.real());
    return side == Side::AbovePlus ? std::polar(1.0, th) : std::polar(1.0, -th);
}

cplx cdqh_alpha(const CDQHParams& p)
{
    p.validate();
    return 0.5 * std::sqrt(p.A * p.B * p.C * p.D / p.q);
}

SpectralPoint spectral_point_x(const CDQHParams& p, cplx x, Side side)
{
    SpectralPoint pt;
    pt.alpha = cdqh_alpha(p);
    pt.x = x;
    pt.z = x / pt.alpha;
    pt.side = side;
    pt.u = joukowski_u(x, side);
    pt.lambda_plus = pt.u / (2.0 * pt.alpha);
    pt.lambda_minus = 1.0 / (2.0 * pt.alpha * pt.u);
    return pt;
}

SpectralPoint spectral_point(const CDQHParams& p, cplx z, Side side)
{
    SpectralPoint pt = spectral_point_x(p, cdqh_alpha(p) * z, side);
    pt.z = z;
    return pt;
}

const char* to_string(Solution s)
{
    switch (s) {
    case Solution::X1Minus: return "X1-";
    case Solution::X1Plus: return "X1+";
    case Solution::X2: return "X2";
    case Solution::X3: return "X3";
    case Solution::X4: return "X4";
    case Solution::X5: return "X5";
    case Solution::X6: return "X6";
    }
    return "?";
}

cplx solution(const CDQHParams& p, const SpectralPoint& pt, Solution which, long n, const TruncationPolicy& pol)
{
    p.validate();
    if (n < -1)
        throw Error(ErrorKind::IndexOutOfWindow, "closed-form solutions are defined for n >= -1");
    const double q = p.q;
    const double qn = qpow(q, n);
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
    switch (which) {
    case Solution::X1Minus:
    case Solution::X1Plus: {
        const cplx l = which == Solution::X1Minus ? lm : lp;
        cplx pre = pn({A, B, C, D}, {B * C * D * l, A * B * C * l}, q, n) * std::pow(l, static_cast<double>(n));
        return pre * x1_series(p, l, n, pol);
    }
    case Solution::X2:
        return pn({A, B}, {}, q, n) / std::pow(A * B, static_cast<double>(n)) *
               phi32(A * qn, A * B * lp, A * B * lm, A * q / C, A * q / D, q, pol);
    case Solution::X3:
        return pn({A, B}, {}, q, n) / std::pow(A * B, static_cast<double>(n)) *
               phi32(B * qn, A * B * lp, A * B * lm, B * q / C, B * q / D, q, pol);
    case Solution::X4:
        return pn({B, C}, {}, q, n) / std::pow(B * C, static_cast<double>(n)) *
               phi32(C * qn, B * C * lp, B * C * lm, C * q / A, C * q / D, q, pol);
    case Solution::X5:
        return pn({B, D}, {}, q, n) / std::pow(B * D, static_cast<double>(n)) *
               phi32(D * qn, B * D * lp, B * D * lm, D * q / C, D * q / A, q, pol);
    case Solution::X6: {
        const cplx abd = A * B * D;
        const double dn = static_cast<double>(n);
        cplx pre = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(q / abd, dn) * std::pow(q, -dn * (dn - 1.0) / 2.0) *
                   pn({abd * lp / q, abd * lm / q}, {}, q, n);
        const double q1n = q / qn;
        return pre * phi32(q1n / B, q1n / A, q1n / D, C * lp * q1n, C * lm * q1n, q, pol);
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown solution");
}

SolutionSequence solution_sequence(const CDQHParams& p, const SpectralPoint& pt, Solution which, long start,
                                   long count, const TruncationPolicy& pol)
{
    return tabulate([&](long n) { return solution(p, pt, which, n, pol); }, start, count, to_string(which));
}

cplx minimal_solution(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol)
{
    if (pt.side == Side::OffCut && !(std::abs(pt.lambda_minus) < std::abs(pt.lambda_plus)))
        throw Error(ErrorKind::BranchAmbiguous, "|lambda_-| = |lambda_+|: no minimal solution");
    return solution(p, pt, Solution::X1Minus, n, pol);
}

cplx x6_over_x4(const CDQHParams& p, const SpectralPoint& pt, const TruncationPolicy& pol)
{
    const double q = p.q;
    const cplx C = p.C;
    return pinf({q / p.B, C * q / p.A, C * q / p.D}, {C, C * pt.lambda_plus * q, C * pt.lambda_minus * q}, q, pol);
}

RelationSides three_term_relation(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol)
{
    const double q = p.q;
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
    cplx lhs = pinf({A * B * C * lp, A * C * lm, q / D, A / C}, {}, q, pol) * solution(p, pt, Solution::X1Plus, n, pol) -
               pinf({A, A * lm, A * B * lp, C * q / D}, {}, q, pol) * solution(p, pt, Solution::X4, n, pol);
    cplx rhs = pinf({C, C * lm, A / C, A * q / D, B * C * lp, C * D * lp, A * B * D * lp},
                    {C / A, A * D * lp, B * C * D * lp}, q, pol) *
               solution(p, pt, Solution::X2, n, pol);
    return {lhs, rhs};
}

cplx cf_stieltjes(const CDQHParams& p, const SpectralPoint& pt, CfForm form, const TruncationPolicy& pol)
{
    p.validate();
    const double q = p.q;
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    const cplx lm = pt.lambda_minus, lp = pt.lambda_plus;
    auto guard = [](cplx den) {
        if (std::abs(den) == 0.0)
            throw Error(ErrorKind::ZeroDivisor, "z is a pole of 1/CF");
        return den;
    };
    switch (form) {
    case CfForm::Pincherle: {
        const bool near_q = equals_q(A, q) || equals_q(B, q) || equals_q(C, q) || equals_q(D, q);
        cplx x0 = minimal_solution(p, pt, 0, pol);
        if (near_q) {
            cplx den = q / (A * B * C * D) * y_minus1(p, lm, pol);
            return x0 / guard(den);
        }
        cplx b02 = coeffs(Family::CDQH, p.family(), 0).b2;
        return x0 / guard(b02 * minimal_solution(p, pt, -1, pol));
    }
    case CfForm::Ratio: {
        cplx pre = A * B * C * D * lm / (q * (1.0 - B * C * D * lm / q) * (1.0 - A * B * C * lm / q));
        cplx num = phi32(B * C * lm, B, C, B * C * D * lm, A * B * C * lm, q, pol);
        cplx den = phi32(B * C * lm, B / q, C / q, B * C * D * lm / q, A * B * C * lm / q, q, pol);
        return pre * num / guard(den);
    }
    case CfForm::RatioAlt: {
        cplx pre = 1.0 / (lp * (1.0 - 1.0 / (A * lp)) * (1.0 - 1.0 / (D * lp)));
        cplx num = phi32(B * C * lm, B, C, q / (A * lp), q / (D * lp), q, pol);
        cplx den = phi32(B * C * lm, B / q, C / q, 1.0 / (A * lp), 1.0 / (D * lp), q, pol);
        return pre * num / guard(den);
    }
    case CfForm::CeqQ: {
        require_ceqq(p);
        cplx pre = A * B * D * lm / ((1.0 - B * D * lm) * (1.0 - A * B * lm));
        return pre * phi32(B * q * lm, B, q, D * B * q * lm, A * B * q * lm, q, pol);
    }
    case CfForm::CeqQProducts: {
        require_ceqq(p);
        cplx abdl = A * B * D * lm;
        cplx pre = abdl * pinf({q, abdl, abdl * q * lm}, {B * D * lm, A * B * lm, A * D * lm}, q, pol);
        return pre * phi32(B * D * lm, A * B * lm, A * D * lm, abdl, abdl * q * lm, q, pol);
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown continued fraction form");
}

double weight(const CDQHParams& p, double x, WeightForm form, const TruncationPolicy& pol)
{
    p.validate();
    if (!(std::abs(x) < 1.0))
        throw Error(ErrorKind::InvalidArgument, "weight needs x in (-1,1)");
    const double q = p.q;
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    SpectralPoint pt = spectral_point_x(p, x, Side::AbovePlus);
    const cplx u = pt.u, k = 2.0 * pt.alpha;
    const cplx lm = pt.lambda_minus, lp = pt.lambda_plus;
    const cplx edge = 2.0 * kPi * sqrt1mx2(x);
    switch (form) {
    case WeightForm::Closed: {
        cplx pre = pinf({A, B, C, D, 1.0 / (u * u), u * u},
                        {k / (A * u), k * u / A, k / (D * u), k * u / D, k * q / (B * C * u), k * q * u / (B * C)}, q, pol);
        auto den = [&](cplx l) { return phi32(B * C * l, B / q, C / q, B * C * D * l / q, A * B * C * l / q, q, pol); };
        cplx d = den(lm) * den(lp);
        if (std::abs(d) < 1e-300)
            throw Error(ErrorKind::PoleOnSupport, "denominator series vanishes on the support");
        return real_weight(pre / d / edge);
    }
    case WeightForm::Casoratian: {
        cplx ym = y_minus1(p, lm, pol), yp = y_minus1(p, lp, pol);
        cplx xm = x1_series(p, lm, 0, pol), xp = x1_series(p, lp, 0, pol);
        cplx d = 2.0 * kPi * cplx(0.0, 1.0) * pt.alpha * q * ym * yp;
        if (std::abs(d) < 1e-300)
            throw Error(ErrorKind::PoleOnSupport, "minimal solution vanishes at n = -1 on the support");
        return real_weight(A * B * C * D * (ym * xp - xm * yp) / d);
    }
    case WeightForm::Stieltjes: {
        cplx f = cf_stieltjes(p, pt, CfForm::Ratio, pol);
        cplx w = -f.imag() / (kPi * pt.alpha);
        return real_weight(w);
    }
    case WeightForm::CeqQ: {
        require_ceqq(p);
        const cplx s1 = std::sqrt(B * D / A), s2 = std::sqrt(A * B / D), s3 = std::sqrt(A * D / B);
        cplx w = pinf({A, B, q, D, 1.0 / (u * u), u * u}, {s1 * u, s1 / u, s2 * u, s2 / u, s3 * u, s3 / u}, q, pol) / edge;
        return real_weight(w);
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown weight form");
}

cplx explicit_poly(const CDQHParams& p, const SpectralPoint& pt, long n, std::optional<cplx> uo)
{
    p.validate();
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    const double q = p.q;
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    const cplx u = uo.value_or(pt.u);
    if (u == cplx{0.0, 0.0})
        throw Error(ErrorKind::ZeroDivisor, "u must be nonzero");
    const cplx k = 2.0 * pt.alpha;
    const double qmn = qpow(q, -n);
    const cplx pre = std::pow(u / k, static_cast<double>(n)) * pn({A, D, k * q / (A * D * u)}, {q}, q, n);
    cplx sum = 0.0, inner = 0.0;
    for (long l = 0; l <= n; ++l) {
        inner += pn({A / q, D / q, A * D * u / k}, {q, k * u / B, k * u / C}, q, l) *
                 std::pow(k * u * q / (A * D), static_cast<double>(l));
        sum += pn({qmn, k * u / B, k * u / C}, {A * D * u * qmn / k, A, D}, q, l) *
               std::pow(A * D / (k * u), static_cast<double>(l)) * inner;
    }
    cplx r = pre * sum;
    check_finite(r, "explicit polynomial overflowed");
    return r;
}

namespace {

using wc = detail::mc;
using wide = detail::multi;

// principal square root
wc msqrt(const wc& z)
{
    wide r = boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
    wide re = boost::multiprecision::sqrt((r + z.re) / 2);
    wide im = boost::multiprecision::sqrt((r - z.re) / 2);
    return {re, z.im < 0 ? wide(-im) : im};
}

wc wpoch(wc a, wide q, long n)
{
    wc p(1);
    wide qj = 1;
    for (long j = 0; j < n; ++j, qj *= q)
        p = p * (wc(1) - a * wc(qj));
    return p;
}

// terminating 3phi2(q^-n, a, b; c, d; q, q) summed in 100-digit arithmetic
cplx wphi32_terminating(long n, wc a, wc b, wc c, wc d, wide q)
{
    wide qmn = 1;
    for (long i = 0; i < n; ++i)
        qmn /= q;
    wc t(1), s(1);
    wide qk = 1;
    for (long k = 0; k < n; ++k, qk *= q) {
        wc num = (wc(1) - wc(qmn * qk)) * (wc(1) - a * wc(qk)) * (wc(1) - b * wc(qk)) * wc(q);
        wc den = (wc(1) - wc(q * qk)) * (wc(1) - c * wc(qk)) * (wc(1) - d * wc(qk));
        t = t * num / den;
        s = s + t;
    }
    return s.to();
}

} // namespace

// The terms of this sum cancel heavily (about n digits at q = 1/2), so it
// is accumulated in 100-digit arithmetic from double inputs.
cplx explicit_poly_ir(const CDQHParams& p, const SpectralPoint& pt, long n, std::optional<cplx> uo)
{
    p.validate();
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    const wide q = p.q;
    const cplx u = uo.value_or(pt.u);
    if (u == cplx{0.0, 0.0})
        throw Error(ErrorKind::ZeroDivisor, "u must be nonzero");
    const wc A(p.A), B(p.B), C(p.C), D(p.D);
    const wc w = B * C * wc(q) / (A * D);
    const wc rd = msqrt(w), wu(u);
    const wc ru = rd * wu, rv = rd / wu;
    wide qmn = 1;
    for (long i = 0; i < n; ++i)
        qmn /= q;
    const wc one(1), qq(q);
    wc sum(0);
    wide qk = 1;
    for (long k = 0; k <= n; ++k, qk *= q) {
        wc inner(0);
        wc wj(1);
        for (long j = 0; j <= n - k; ++j, wj = wj * w) {
            wc num = wpoch(A / qq, q, j) * wpoch(D / qq, q, j) * wpoch(wc(qk * q), q, j) * wpoch(wc(qk * qmn), q, j);
            wc den = wpoch(qq, q, j) * wpoch(C * wc(qk), q, j) * wpoch(B * wc(qk), q, j) * wpoch(wc(qmn), q, j);
            inner = inner + num / den * wj;
        }
        wc outer = wpoch(wc(qmn), q, k) * wpoch(ru, q, k) * wpoch(rv, q, k) /
                   (wpoch(qq, q, k) * wpoch(B, q, k) * wpoch(C, q, k));
        sum = sum + outer * wc(qk) * inner;
    }
    wc bc = B * C, bcn(1);
    for (long i = 0; i < n; ++i)
        bcn = bcn * bc;
    cplx res = (wpoch(B, q, n) * wpoch(C, q, n) / bcn * sum).to();
    check_finite(res, "explicit polynomial overflowed");
    return res;
}

std::vector<cplx> genfun_coeffs(const CDQHParams& p, const SpectralPoint& pt, long n_max)
{
    p.validate();
    const double q = p.q;
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    const cplx u = pt.u, k = 2.0 * pt.alpha;
    std::vector<cplx> f;
    f.push_back(1.0);
    for (long n = 1; n <= n_max; ++n) {
        const double qn1 = qpow(q, n - 1);
        cplx den = (1.0 - A * qn1) * (1.0 - D * qn1);
        if (den == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "first-order recursion for f_n is singular");
        cplx rhs = (1.0 - k * u * qn1 / B) * (1.0 - k * u * qn1 / C) * f.back() / u +
                   std::pow(k * q / (A * D), static_cast<double>(n)) * (1.0 - A / q) * (1.0 - D / q) *
                       pn({A * D * u / k}, {q}, q, n);
        f.push_back(rhs / den);
    }
    std::vector<cplx> G(f.size(), 0.0);
    for (long n = 0; n <= n_max; ++n)
        for (long m = 0; m <= n; ++m)
            G[n] += pn({k * q / (A * D * u)}, {q}, q, m) * std::pow(u, static_cast<double>(m)) * f[n - m];
    return G;
}

std::vector<cplx> genfun_ceqq_coeffs(const CDQHParams& p, const SpectralPoint& pt, long n_max)
{
    p.validate();
    require_ceqq(p);
    const double q = p.q;
    const cplx k = 2.0 * pt.alpha, u = pt.u;
    const cplx a = k / p.B, b = k / p.D, c = k / p.A;
    std::vector<cplx> G(static_cast<std::size_t>(std::max<long>(n_max + 1, 0)), 0.0);
    for (long n = 0; n <= n_max; ++n)
        for (long m = 0; m <= n; ++m)
            G[n] += pn({c / u}, {q}, q, m) * std::pow(u, static_cast<double>(m)) *
                    pn({a * u, b * u}, {q, a * b}, q, n - m) * std::pow(u, -static_cast<double>(n - m));
    return G;
}

cplx dual_qhahn_reduction(const CDQHParams& p, const SpectralPoint& pt, long n, DualQHahnForm form)
{
    p.validate();
    require_ceqq(p);
    const double q = p.q;
    const cplx A = p.A, B = p.B;
    const cplx k = 2.0 * pt.alpha, u = pt.u;
    const wc wa(A), wb(B), wk(k), wu(u);
    cplx s = wphi32_terminating(n, wa * wb * wu / wk, wa * wb / (wk * wu), wa, wb, q);
    cplx ab = pn({A, B}, {}, q, n);
    if (form == DualQHahnForm::Monic)
        return ab / std::pow(A * B, static_cast<double>(n)) * s;
    return std::pow(std::sqrt(A * B / p.D), -static_cast<double>(n)) * ab * s;
}

cplx x2_two_term(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol)
{
    p.validate();
    const double q = p.q;
    const cplx A = p.A, B = p.B, C = p.C, D = p.D;
    const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
    const double q1n = qpow(q, 1 - n);
    cplx s1;
    if (C == cplx{q, 0.0}) {
        // terminating; sum it with the products formed in extended precision
        const wc wa(A), wb(B), wk(2.0 * pt.alpha), wu(pt.u);
        s1 = wphi32_terminating(n, wa * wb * wu / wk, wa * wb / (wk * wu), wa, wb, q);
    } else {
        s1 = unscaled(phi_best(SeriesSpec{{q1n / C, A * B * lp, A * B * lm}, {A * q / C, B * q / C}, q, q}, pol));
    }
    cplx t1 = pinf({A * C * lm, A * C * lp}, {A * q / D, C / B}, q, pol) * s1;
    cplx c2 = pinf({q1n / C, A * B * lp, A * B * lm, A * q / B}, {A * q / C, A * q / D, B / C, q1n / B}, q, pol);
    cplx t2 = c2 == cplx{0.0, 0.0}
                  ? cplx{0.0, 0.0}
                  : c2 * unscaled(phi_best(SeriesSpec{{q1n / B, A * C * lm, A * C * lp}, {A * q / B, C * q / B}, q, q}, pol));
    return pn({A, B}, {}, q, n) / std::pow(A * B, static_cast<double>(n)) * (t1 + t2);
}

cplx x2_ceqq(const CDQHParams& p, const SpectralPoint& pt, long n, const TruncationPolicy& pol)
{
    p.validate();
    require_ceqq(p);
    const double q = p.q;
    const cplx A = p.A, B = p.B, D = p.D;
    const cplx lp = pt.lambda_plus, lm = pt.lambda_minus;
    const wc wa(A), wb(B), wk(2.0 * pt.alpha), wu(pt.u);
    cplx s = wphi32_terminating(n, wa * wb * wu / wk, wa * wb / (wk * wu), wa, wb, q);
    return pn({A, B}, {}, q, n) / std::pow(A * B, static_cast<double>(n)) *
           pinf({A * q * lm, A * q * lp}, {A * q / D, q / B}, q, pol) * s;
}

} // namespace qdh
