#include "qdh/recurrence.hpp"

#include <algorithm>
#include <cmath>

namespace qdh {

namespace {

struct FamilyName {
    Family f;
    const char* name;
};

constexpr FamilyName kNames[] = {
    {Family::CDQH, "cdqh"},
    {Family::BigQLaguerre, "big-q-laguerre"},
    {Family::Wall, "wall"},
    {Family::LimitWall, "limit-wall"},
    {Family::FourthLimit, "fourth-limit"},
    {Family::AlSalamChihara, "al-salam-chihara"},
    {Family::AlSalamCarlitz1, "al-salam-carlitz-1"},
    {Family::LimitASC1, "limit-asc1"},
    {Family::ContQHermite, "cont-q-hermite"},
    {Family::LimitQHermite, "limit-q-hermite"},
    {Family::ContBigQHermite, "cont-big-q-hermite"},
    {Family::QBesselOrder, "q-bessel"},
};

cplx inv(cplx v, const char* name)
{
    if (v == cplx{0.0, 0.0})
        throw Error(ErrorKind::InvalidArgument, std::string("parameter ") + name + " must be nonzero");
    return 1.0 / v;
}

} // namespace

const char* to_string(Family f)
{
    for (const auto& e : kNames)
        if (e.f == f)
            return e.name;
    return "unknown";
}

Family family_from_string(const std::string& name)
{
    for (const auto& e : kNames)
        if (name == e.name)
            return e.f;
    throw Error(ErrorKind::UnknownFamily, "unknown family '" + name + "'");
}

std::vector<std::string> required_params(Family f)
{
    switch (f) {
    case Family::CDQH: return {"A", "B", "C", "D"};
    case Family::BigQLaguerre: return {"A", "B", "C"};
    case Family::Wall: return {"A", "B"};
    case Family::LimitWall: return {"A"};
    case Family::FourthLimit: return {};
    case Family::AlSalamChihara: return {"A", "B", "delta"};
    case Family::AlSalamCarlitz1: return {"A", "delta"};
    case Family::LimitASC1: return {"delta"};
    case Family::ContQHermite: return {"A", "delta"};
    case Family::LimitQHermite: return {"delta"};
    case Family::ContBigQHermite: return {"A", "a"};
    case Family::QBesselOrder: return {"a"};
    }
    throw Error(ErrorKind::UnknownFamily, "unknown family");
}

Coeffs coeffs(Family f, const FamilyParams& p, long n)
{
    check_base(p.q);
    if (n < 0)
        throw Error(ErrorKind::IndexOutOfWindow, "coefficients need n >= 0");
    const double q = p.q;
    const double qn = std::pow(q, static_cast<double>(n));
    const double qn1 = qn / q;
    const double q2n1 = qn * qn / q;
    auto f1 = [&](cplx P) { return 1.0 - P * qn1; };
    switch (f) {
    case Family::CDQH: {
        cplx s = inv(p.A, "A") + inv(p.B, "B") + inv(p.C, "C") + inv(p.D, "D");
        return {s * qn - (1.0 + q) * q2n1, q / (p.A * p.B * p.C * p.D) * f1(p.A) * f1(p.B) * f1(p.C) * f1(p.D)};
    }
    case Family::BigQLaguerre: {
        cplx s = inv(p.A, "A") + inv(p.B, "B") + inv(p.C, "C");
        return {s * qn - (1.0 + q) * q2n1, -qn / (p.A * p.B * p.C) * f1(p.A) * f1(p.B) * f1(p.C)};
    }
    case Family::Wall: {
        cplx s = inv(p.A, "A") + inv(p.B, "B");
        return {s * qn - (1.0 + q) * q2n1, q2n1 / (p.A * p.B) * f1(p.A) * f1(p.B)};
    }
    case Family::LimitWall:
        return {inv(p.A, "A") * qn - (1.0 + q) * q2n1, -qn * qn1 * qn1 / p.A * f1(p.A)};
    case Family::FourthLimit:
        return {-(1.0 + q) * q2n1, q2n1 * q2n1 / q};
    case Family::AlSalamChihara: {
        cplx id = inv(p.delta, "delta");
        inv(p.A, "A");
        inv(p.B, "B");
        return {(1.0 + id) * qn, q / (p.A * p.B * p.delta) * f1(p.A) * f1(p.B)};
    }
    case Family::AlSalamCarlitz1: {
        cplx id = inv(p.delta, "delta");
        inv(p.A, "A");
        return {(1.0 + id) * qn, -qn / (p.A * p.delta) * f1(p.A)};
    }
    case Family::LimitASC1: {
        cplx id = inv(p.delta, "delta");
        return {(1.0 + id) * qn, q2n1 * id};
    }
    case Family::ContQHermite:
        inv(p.A, "A");
        inv(p.delta, "delta");
        return {0.0, q / (p.A * p.delta) * f1(p.A)};
    case Family::LimitQHermite:
        return {0.0, -qn * inv(p.delta, "delta")};
    case Family::ContBigQHermite:
        inv(p.A, "A");
        return {qn, p.a * q / p.A * f1(p.A)};
    case Family::QBesselOrder:
        return {qn, -p.a * qn};
    }
    throw Error(ErrorKind::UnknownFamily, "unknown family");
}

BirthDeathRates birth_death_rates(const FamilyParams& p, long n)
{
    check_base(p.q);
    const double q = p.q;
    const double qn = std::pow(q, static_cast<double>(n));
    const double qn1 = qn / q;
    return {(1.0 - p.A * qn) * (1.0 - p.B * qn) / (p.A * p.B),
            q * (1.0 - p.C * qn1) * (1.0 - p.D * qn1) / (p.C * p.D)};
}

cplx SolutionSequence::at(long n) const
{
    if (!covers(n))
        throw Error(ErrorKind::IndexOutOfWindow, "index " + std::to_string(n) + " outside sequence window");
    const auto i = static_cast<std::size_t>(n - start_index);
    double ls = i < log_scale.size() ? log_scale[i] : 0.0;
    return ls == 0.0 ? values[i] : values[i] * std::exp(ls);
}

double SolutionSequence::log_scale_at(long n) const
{
    if (!covers(n))
        throw Error(ErrorKind::IndexOutOfWindow, "index " + std::to_string(n) + " outside sequence window");
    const auto i = static_cast<std::size_t>(n - start_index);
    return i < log_scale.size() ? log_scale[i] : 0.0;
}

SolutionSequence forward_eval(const CoefficientFamily& fam, cplx x_prev, cplx x0, long n_max)
{
    if (n_max < 0)
        throw Error(ErrorKind::InvalidArgument, "n_max must be >= 0");
    SolutionSequence s;
    s.start_index = 0;
    s.provenance = "forward recurrence";
    s.values.reserve(static_cast<std::size_t>(n_max) + 1);
    cplx prev = x_prev, cur = x0;
    double ls = 0.0;
    s.values.push_back(cur);
    s.log_scale.push_back(ls);
    for (long n = 0; n < n_max; ++n) {
        Coeffs c = coeffs(fam, n);
        cplx next = (fam.z - c.a) * cur - c.b2 * prev;
        prev = cur;
        cur = next;
        if ((n + 1) % 50 == 0) {
            double m = std::max(std::abs(prev), std::abs(cur));
            if (m > 1e100 || (m > 0.0 && m < 1e-100)) {
                prev /= m;
                cur /= m;
                ls += std::log(m);
            }
        }
        if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
            throw Error(ErrorKind::Overflow, "forward recurrence overflowed");
        s.values.push_back(cur);
        s.log_scale.push_back(ls);
    }
    return s;
}

cplx monic_poly(const CoefficientFamily& fam, long n)
{
    SolutionSequence s = forward_eval(fam, 0.0, 1.0, n);
    return s.at(n);
}

std::vector<std::vector<cplx>> poly_coefficients(Family f, const FamilyParams& p, long n_max)
{
    std::vector<std::vector<cplx>> P;
    if (n_max < 0)
        return P;
    P.push_back({1.0});
    std::vector<cplx> prev; // P_{-1} = 0
    for (long n = 0; n < n_max; ++n) {
        Coeffs c = coeffs(f, p, n);
        const auto& cur = P.back();
        std::vector<cplx> next(cur.size() + 1, 0.0);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k + 1] += cur[k];
            next[k] -= c.a * cur[k];
        }
        for (std::size_t k = 0; k < prev.size(); ++k)
            next[k] -= c.b2 * prev[k];
        prev = cur;
        P.push_back(std::move(next));
    }
    return P;
}

namespace {

struct ResidualTerms {
    cplx t0, t1, t2;
};

ResidualTerms residual_terms(const CoefficientFamily& fam, const SolutionSequence& seq, long n)
{
    if (!seq.covers(n - 1) || !seq.covers(n + 1))
        throw Error(ErrorKind::IndexOutOfWindow, "residual needs indices n-1..n+1");
    const double ref = seq.log_scale_at(n);
    auto scaled = [&](long k) {
        const auto i = static_cast<std::size_t>(k - seq.start_index);
        double ls = seq.log_scale.empty() ? 0.0 : seq.log_scale[i] - ref;
        return ls == 0.0 ? seq.values[i] : seq.values[i] * std::exp(ls);
    };
    Coeffs c = coeffs(fam, n);
    return {scaled(n + 1), -(fam.z - c.a) * scaled(n), c.b2 * scaled(n - 1)};
}

} // namespace

cplx residual(const CoefficientFamily& fam, const SolutionSequence& seq, long n)
{
    auto t = residual_terms(fam, seq, n);
    return t.t0 + t.t1 + t.t2;
}

double relative_residual(const CoefficientFamily& fam, const SolutionSequence& seq, long n)
{
    auto t = residual_terms(fam, seq, n);
    double m = std::max({std::abs(t.t0), std::abs(t.t1), std::abs(t.t2)});
    if (m == 0.0)
        return 0.0;
    return std::abs(t.t0 + t.t1 + t.t2) / m;
}

cplx casoratian(const SolutionSequence& x, const SolutionSequence& y, long n)
{
    return x.at(n) * y.at(n + 1) - x.at(n + 1) * y.at(n);
}

cplx cf_truncated(const CoefficientFamily& fam, long depth)
{
    if (depth < 1)
        throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
    cplx t = 0.0;
    for (long k = depth - 1; k >= 1; --k) {
        Coeffs c = coeffs(fam, k);
        cplx den = fam.z - c.a - t;
        if (den == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDenominator, "continued fraction convergent hits a pole");
        t = c.b2 / den;
    }
    return fam.z - coeffs(fam, 0).a - t;
}

CfResult cf_adaptive(const CoefficientFamily& fam, double rel_tol, long start_depth, long max_depth)
{
    CfResult r;
    long d = std::max<long>(start_depth, 1);
    cplx prev = cf_truncated(fam, d);
    while (2 * d <= max_depth) {
        d *= 2;
        cplx cur = cf_truncated(fam, d);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) {
            r.value = cur;
            r.depth = d;
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    r.value = prev;
    r.depth = d;
    return r;
}

std::vector<double> minimality_ratio(const SolutionSequence& candidate, const SolutionSequence& dominant)
{
    std::vector<double> out;
    long lo = std::max(candidate.start_index, dominant.start_index);
    long hi = std::min(candidate.end_index(), dominant.end_index());
    for (long n = lo; n < hi; ++n) {
        cplx d = dominant.at(n);
        if (d == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "dominant solution vanishes at n=" + std::to_string(n));
        double lr = candidate.log_scale_at(n) - dominant.log_scale_at(n);
        const auto ic = static_cast<std::size_t>(n - candidate.start_index);
        const auto id = static_cast<std::size_t>(n - dominant.start_index);
        out.push_back(std::abs(candidate.values[ic] / dominant.values[id]) * std::exp(lr));
    }
    return out;
}

} // namespace qdh
