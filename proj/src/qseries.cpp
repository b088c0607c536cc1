#include "qdh/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "wide.hpp"

namespace qdh {

namespace {

constexpr double kZeroTol = 1e-13;

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// 1 - x, snapped to zero when x is q^{-m} q^m up to rounding
cplx one_minus(cplx x)
{
    cplx f = 1.0 - x;
    if (std::abs(f) <= 4e-15 * std::max(1.0, std::abs(x)))
        return {0.0, 0.0};
    return f;
}

bool near_zero(cplx f, cplx x) { return std::abs(f) <= kZeroTol * std::max(1.0, std::abs(x)); }

} // namespace

QBase::QBase(double q) : q_(q) { check_base(q); }

void TruncationPolicy::validate() const
{
    if (!(rel_tol > 0.0))
        throw Error(ErrorKind::InvalidArgument, "rel_tol must be positive");
    if (max_terms < 1)
        throw Error(ErrorKind::InvalidArgument, "max_terms must be at least 1");
}

void check_base(double q)
{
    if (!(q > 0.0 && q < 1.0))
        throw Error(ErrorKind::InvalidBase, "q must satisfy 0 < q < 1");
}

void check_finite(cplx v, const char* where)
{
    if (!finite(v))
        throw Error(ErrorKind::Overflow, where);
}

cplx qpoch_inf(cplx a, double q, const TruncationPolicy& pol)
{
    check_base(q);
    if (a == cplx{0.0, 0.0})
        return 1.0;
    cplx p = 1.0;
    cplx t = a;
    const double stop = pol.rel_tol * (1.0 - q);
    for (long j = 0;; ++j) {
        if (std::abs(t) < stop) {
            // log of the remaining factors is -t/(1-q) to first order
            p *= std::exp(-t / (1.0 - q));
            break;
        }
        p *= one_minus(t);
        if (p == cplx{0.0, 0.0})
            return p;
        t *= q;
        if (j > 1000000)
            throw Error(ErrorKind::MaxTermsExceeded, "infinite product");
    }
    check_finite(p, "infinite q-Pochhammer product overflowed");
    return p;
}

cplx qpoch(cplx a, double q, long n, const TruncationPolicy& pol)
{
    check_base(q);
    if (n == kInf)
        return qpoch_inf(a, q, pol);
    cplx p = 1.0;
    if (n >= 0) {
        cplx t = a;
        for (long j = 0; j < n; ++j) {
            p *= one_minus(t);
            t *= q;
        }
    } else {
        cplx t = a / q;
        for (long m = 1; m <= -n; ++m) {
            cplx f = one_minus(t);
            if (near_zero(f, t))
                throw Error(ErrorKind::ZeroDivisor, "negative-index q-Pochhammer pole");
            p /= f;
            t /= q;
        }
    }
    check_finite(p, "q-Pochhammer product overflowed");
    return p;
}

cplx qpoch_multi(const std::vector<cplx>& params, double q, long n, const TruncationPolicy& pol)
{
    cplx p = 1.0;
    for (const auto& a : params)
        p *= qpoch(a, q, n, pol);
    check_finite(p, "q-Pochhammer product overflowed");
    return p;
}

long termination_index(const std::vector<cplx>& num, double q, int max_terms)
{
    long best = -1;
    const double lq = std::log(1.0 / q);
    for (const auto& p : num) {
        if (std::abs(p) == 0.0)
            continue;
        double mr = std::round(std::log(std::abs(p)) / lq);
        if (mr < 0.0 || mr > max_terms)
            continue;
        long m = static_cast<long>(mr);
        double target = std::pow(q, -static_cast<double>(m));
        if (std::abs(p - target) < 1e-13 * target && (best < 0 || m < best))
            best = m;
    }
    return best;
}

namespace {

// beyond this cancellation the direct sum is redone in wide precision
constexpr double kWideCond = 1e4;

// Largest parameter modulus; terms may still grow until max_param q^k is small.
double max_param(const SeriesSpec& spec)
{
    double m = 0.0;
    for (const auto& a : spec.num)
        m = std::max(m, std::abs(a));
    for (const auto& b : spec.den)
        m = std::max(m, std::abs(b));
    return m;
}

// Same summation as phi_eval, accumulated in wide precision.
detail::wc sum_wide(const SeriesSpec& spec, long limit, bool terminating, double rel_tol, long& k_out)
{
    using detail::wc;
    using detail::wide;
    const wide q = spec.q;
    const int e = 1 + static_cast<int>(spec.den.size()) - static_cast<int>(spec.num.size());
    std::vector<wc> num, den;
    for (const auto& a : spec.num)
        num.emplace_back(a);
    for (const auto& b : spec.den)
        den.emplace_back(b);
    const wc z(spec.z), one(1);
    wc term(1), sum(1);
    wide qk = 1;
    const double pmax = max_param(spec);
    int small = 0;
    long k = 0;
    while (k < limit) {
        wc ratio = z / wc(1 - qk * q);
        for (const auto& a : num)
            ratio = ratio * (one - a * wc(qk));
        for (const auto& b : den)
            ratio = ratio / (one - b * wc(qk));
        for (int i = 0; i < e; ++i)
            ratio = ratio * wc(-qk);
        for (int i = 0; i < -e; ++i)
            ratio = ratio / wc(-qk);
        term = term * ratio;
        sum = sum + term;
        ++k;
        qk *= q;
        if (terminating)
            continue;
        if (term.abs2() == 0.0)
            break;
        if (term.abs2() < rel_tol * rel_tol * sum.abs2() && pmax * static_cast<double>(qk) < 0.5) {
            if (++small >= 3)
                break;
        } else {
            small = 0;
        }
    }
    k_out = k;
    return sum;
}

} // namespace

SeriesValue phi_eval(const SeriesSpec& spec, const TruncationPolicy& pol)
{
    check_base(spec.q);
    pol.validate();
    const double q = spec.q;
    const int r = static_cast<int>(spec.num.size());
    const int s = static_cast<int>(spec.den.size());
    for (const auto& v : spec.num)
        if (!finite(v))
            throw Error(ErrorKind::InvalidArgument, "non-finite series parameter");
    for (const auto& v : spec.den)
        if (!finite(v))
            throw Error(ErrorKind::InvalidArgument, "non-finite series parameter");
    if (!finite(spec.z))
        throw Error(ErrorKind::InvalidArgument, "non-finite series argument");

    const long m = termination_index(spec.num, q, pol.max_terms);
    if (m < 0) {
        if (r > s + 1)
            throw Error(ErrorKind::DivergentSeries, "nonterminating series with r > s+1");
        if (r == s + 1 && std::abs(spec.z) >= 1.0)
            throw Error(ErrorKind::DivergentSeries, "r = s+1 series with |z| >= 1");
    }

    SeriesValue out;
    cplx term = 1.0;
    cplx sum = 1.0;
    double maxterm = 1.0;
    const int e = 1 + s - r;
    double qk = 1.0;
    const double pmax = max_param(spec);
    int small = 0;
    const long limit = m >= 0 ? m : pol.max_terms;
    long k = 0;
    bool done = (limit == 0) || spec.z == cplx{0.0, 0.0};
    while (!done) {
        cplx ratio = spec.z / (1.0 - qk * q);
        for (const auto& a : spec.num)
            ratio *= one_minus(a * qk);
        for (const auto& b : spec.den) {
            cplx f = one_minus(b * qk);
            if (near_zero(f, b * qk))
                throw Error(ErrorKind::ZeroDivisor, "denominator parameter hits q^{-k}");
            ratio /= f;
        }
        if (e > 0)
            for (int i = 0; i < e; ++i)
                ratio *= -qk;
        else
            for (int i = 0; i < -e; ++i)
                ratio /= -qk;
        term *= ratio;
        sum += term;
        ++k;
        if (!finite(sum))
            throw Error(ErrorKind::Overflow, "series sum overflowed");
        maxterm = std::max(maxterm, std::abs(term));
        qk *= q;
        if (m >= 0) {
            done = k >= m;
            continue;
        }
        if (term == cplx{0.0, 0.0})
            break;
        if (std::abs(term) < pol.rel_tol * std::abs(sum) && pmax * qk < 0.5) {
            if (++small >= 3)
                break;
        } else {
            small = 0;
        }
        if (k >= pol.max_terms)
            throw Error(ErrorKind::MaxTermsExceeded, "series did not converge within max_terms");
    }
    out.value = sum;
    out.terms = static_cast<int>(k) + 1;
    out.cond = std::abs(sum) > 0.0 ? maxterm / std::abs(sum) : std::numeric_limits<double>::infinity();
    if (out.cond > kWideCond) {
        long kw = 0;
        detail::wc ws = sum_wide(spec, limit, m >= 0, std::min(pol.rel_tol, 1e-17), kw);
        cplx w = ws.to();
        if (finite(w) && std::abs(w) > 0.0) {
            out.value = w;
            out.terms = static_cast<int>(kw) + 1;
            out.route = "direct-wide";
        }
    }
    return out;
}

cplx phi(const SeriesSpec& spec, const TruncationPolicy& pol) { return phi_eval(spec, pol).value; }

cplx unscaled(const SeriesValue& v)
{
    if (v.log_scale == 0.0 || v.value == cplx{0.0, 0.0})
        return v.value;
    cplx r = v.value * std::exp(v.log_scale);
    if (!finite(r) || r == cplx{0.0, 0.0})
        throw Error(ErrorKind::Overflow, "series value outside double range");
    return r;
}

// ---------------------------------------------------------------------------
// Representation selection

namespace {

struct Piece {
    std::vector<cplx> pre_num; // infinite-product parameters in the prefactor
    std::vector<cplx> pre_den;
    cplx scale{1.0, 0.0};
    std::vector<cplx> num;
    std::vector<cplx> den;
    cplx z;
};

using Evaluator = std::function<std::optional<SeriesValue>()>;

// m * exp(l)
struct Scaled {
    cplx m{1.0, 0.0};
    double l = 0.0;
    double kappa = 0.0; // sum of |t|/|1-t| over the factors 1-t
};

void renorm(Scaled& s)
{
    double a = std::abs(s.m);
    if (a > 0.0 && (a > 1e100 || a < 1e-100)) {
        s.l += std::log(a);
        s.m /= a;
    }
}

// (a)_inf with a running log scale, so huge |a| does not overflow
Scaled qpoch_inf_scaled(cplx a, double q, const TruncationPolicy& pol)
{
    Scaled p;
    if (a == cplx{0.0, 0.0})
        return p;
    cplx t = a;
    const double stop = pol.rel_tol * (1.0 - q);
    for (long j = 0;; ++j) {
        if (std::abs(t) < stop) {
            p.m *= std::exp(-t / (1.0 - q));
            break;
        }
        const cplx f = one_minus(t);
        p.m *= f;
        if (p.m == cplx{0.0, 0.0})
            return {0.0, 0.0};
        p.kappa += std::abs(t) / std::abs(f);
        renorm(p);
        t *= q;
        if (j > 1000000)
            throw Error(ErrorKind::MaxTermsExceeded, "infinite product");
    }
    return p;
}

std::optional<Scaled> product_ratio(const std::vector<cplx>& nums, const std::vector<cplx>& dens, double q,
                                    const TruncationPolicy& pol)
{
    for (const auto& v : nums)
        if (!finite(v))
            return std::nullopt;
    Scaled r;
    for (const auto& v : dens) {
        if (!finite(v))
            return std::nullopt;
        // a vanishing factor 1 - v q^j in the denominator makes this form singular
        cplx t = v;
        for (int j = 0; j < 4000 && std::abs(t) > 1e-3; ++j, t *= q)
            if (near_zero(1.0 - t, t))
                return std::nullopt;
        Scaled d = qpoch_inf_scaled(v, q, pol);
        if (d.m == cplx{0.0, 0.0})
            return std::nullopt;
        r.m /= d.m;
        r.l -= d.l;
        r.kappa += d.kappa;
        renorm(r);
    }
    for (const auto& v : nums) {
        Scaled n = qpoch_inf_scaled(v, q, pol);
        r.m *= n.m;
        r.l += n.l;
        r.kappa += n.kappa;
        renorm(r);
    }
    if (!finite(r.m))
        return std::nullopt;
    return r;
}

// folds the log scale back into the value when the result fits in a double
void fold(SeriesValue& v)
{
    if (v.log_scale == 0.0 || v.value == cplx{0.0, 0.0}) {
        if (v.value == cplx{0.0, 0.0})
            v.log_scale = 0.0;
        return;
    }
    cplx r = v.value * std::exp(v.log_scale);
    if (finite(r) && std::abs(r) > 1e-290) {
        v.value = r;
        v.log_scale = 0.0;
    }
}

std::optional<SeriesValue> eval_pieces(const std::vector<Piece>& pieces, double q, const TruncationPolicy& pol,
                                       const std::string& route)
{
    struct Part {
        cplx v;
        double l;
        double w; // |v| cond, same scale as v
    };
    std::vector<Part> parts;
    try {
        for (const auto& p : pieces) {
            auto pre = product_ratio(p.pre_num, p.pre_den, q, pol);
            if (!pre)
                return std::nullopt;
            cplx c = pre->m * p.scale;
            // a vanishing prefactor multiplies a singular series here
            if (c == cplx{0.0, 0.0})
                return std::nullopt;
            for (const auto& v : p.num)
                if (!finite(v))
                    return std::nullopt;
            for (const auto& v : p.den)
                if (!finite(v))
                    return std::nullopt;
            if (!finite(p.z))
                return std::nullopt;
            SeriesSpec spec{p.num, p.den, q, p.z};
            SeriesValue sv = phi_eval(spec, pol);
            cplx v = c * sv.value;
            parts.push_back({v, pre->l, std::abs(v) * (sv.cond + pre->kappa)});
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    double L = -std::numeric_limits<double>::infinity();
    for (const auto& pt : parts)
        if (pt.v != cplx{0.0, 0.0})
            L = std::max(L, pt.l);
    if (!std::isfinite(L))
        L = 0.0;
    cplx total = 0.0;
    double w = 0.0;
    for (const auto& pt : parts) {
        const double f = std::exp(pt.l - L);
        total += pt.v * f;
        w = std::max(w, pt.w * f);
    }
    if (!finite(total))
        return std::nullopt;
    SeriesValue out;
    out.value = total;
    out.log_scale = L;
    out.cond = std::abs(total) > 0.0 ? std::max(1.0, w / std::abs(total))
                                     : (w == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
    out.route = route;
    fold(out);
    return out;
}

SeriesValue pick_best(const std::vector<Evaluator>& cands)
{
    std::optional<SeriesValue> best;
    for (const auto& c : cands) {
        auto v = c();
        if (v && (!best || v->cond < best->cond))
            best = v;
    }
    if (!best)
        throw Error(ErrorKind::NoConvergentRepresentation, "no convergent representation found");
    return *best;
}

Evaluator pieces_eval(std::vector<Piece> pieces, double q, const TruncationPolicy& pol, std::string route)
{
    return [pieces = std::move(pieces), q, pol, route = std::move(route)]() {
        return eval_pieces(pieces, q, pol, route);
    };
}

Evaluator direct_eval(const SeriesSpec& spec, const TruncationPolicy& pol)
{
    return [spec, pol]() -> std::optional<SeriesValue> {
        try {
            return phi_eval(spec, pol);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
}

} // namespace

SeriesValue phi32_balanced(cplx a, cplx b, cplx c, cplx d, cplx e, double q, const TruncationPolicy& pol)
{
    check_base(q);
    if (a * b * c == cplx{0.0, 0.0})
        throw Error(ErrorKind::ZeroDivisor, "balanced 3phi2 needs abc != 0");
    std::vector<Evaluator> cands;
    const cplx x = d * e / (a * b * c);
    cands.push_back(direct_eval(SeriesSpec{{a, b, c}, {d, e}, q, x}, pol));
    const cplx nums[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        const cplx aa = nums[i];
        const cplx bb = nums[(i + 1) % 3];
        const cplx cc = nums[(i + 2) % 3];
        for (int swap = 0; swap < 2; ++swap) {
            const cplx dd = swap ? e : d;
            const cplx ee = swap ? d : e;
            Piece p{{ee / aa, dd * ee / (bb * cc)}, {ee, dd * ee / (aa * bb * cc)}, 1.0,
                    {aa, dd / bb, dd / cc}, {dd, dd * ee / (bb * cc)}, ee / aa};
            cands.push_back(pieces_eval({p}, q, pol, "balanced:e/a"));
        }
        // argument b, each numerator in turn
        const cplx b2 = nums[i];
        const cplx a2 = nums[(i + 1) % 3];
        const cplx c2 = nums[(i + 2) % 3];
        Piece p{{b2, d * e / (a2 * b2), d * e / (b2 * c2)}, {d, e, d * e / (a2 * b2 * c2)}, 1.0,
                {d / b2, e / b2, d * e / (a2 * b2 * c2)}, {d * e / (a2 * b2), d * e / (b2 * c2)}, b2};
        cands.push_back(pieces_eval({p}, q, pol, "balanced:b"));
    }
    return pick_best(cands);
}

cplx phi32(cplx a, cplx b, cplx c, cplx d, cplx e, double q, const TruncationPolicy& pol)
{
    return unscaled(phi32_balanced(a, b, c, d, e, q, pol));
}

namespace {

void add_phi21_candidates(std::vector<Evaluator>& cands, cplx a, cplx b, cplx c, cplx z, double q,
                          const TruncationPolicy& pol)
{
    cands.push_back(direct_eval(SeriesSpec{{a, b}, {c}, q, z}, pol));
    const cplx pairs[2][2] = {{a, b}, {b, a}};
    for (const auto& pr : pairs) {
        const cplx A = pr[0], B = pr[1];
        if (B != cplx{0.0, 0.0}) {
            cands.push_back(pieces_eval({Piece{{B, A * z}, {c, z}, 1.0, {c / B, z}, {A * z}, B}}, q, pol, "heine1"));
            if (c != cplx{0.0, 0.0})
                cands.push_back(pieces_eval({Piece{{c / B, B * z}, {c, z}, 1.0, {A * B * z / c, B}, {B * z}, c / B}},
                                            q, pol, "heine2"));
            cands.push_back(pieces_eval({Piece{{A * z}, {z}, 1.0, {A, c / B}, {c, A * z}, B * z}}, q, pol, "jackson"));
        }
    }
    if (c != cplx{0.0, 0.0})
        cands.push_back(pieces_eval({Piece{{a * b * z / c}, {z}, 1.0, {c / a, c / b}, {c}, a * b * z / c}}, q, pol,
                                    "heine3"));
    if (std::abs(z) > 1.0 && a != cplx{0.0, 0.0} && b != cplx{0.0, 0.0}) {
        const cplx w = c * q / (a * b * z);
        Piece p1{{b, c / a, a * z, q / (a * z)}, {c, b / a, z, q / z}, 1.0, {a, a * q / c}, {a * q / b}, w};
        Piece p2{{a, c / b, b * z, q / (b * z)}, {c, a / b, z, q / z}, 1.0, {b, b * q / c}, {b * q / a}, w};
        if (c == cplx{0.0, 0.0}) {
            // a q / c is infinite; the c -> 0 limit of the connection formula is not used
        } else {
            cands.push_back(pieces_eval({p1, p2}, q, pol, "connection"));
        }
    }
}

} // namespace

SeriesValue phi21_cont(cplx a, cplx b, cplx c, cplx z, double q, const TruncationPolicy& pol)
{
    check_base(q);
    std::vector<Evaluator> cands;
    add_phi21_candidates(cands, a, b, c, z, q, pol);
    return pick_best(cands);
}

SeriesValue phi_best(const SeriesSpec& spec, const TruncationPolicy& pol)
{
    check_base(spec.q);
    const double q = spec.q;
    const auto& N = spec.num;
    const auto& D = spec.den;
    const cplx z = spec.z;
    const std::size_t r = N.size(), s = D.size();

    if (r == 3 && s == 2) {
        cplx abc = N[0] * N[1] * N[2];
        if (abc != cplx{0.0, 0.0}) {
            cplx x = D[0] * D[1] / abc;
            if (std::abs(x - z) <= 1e-12 * std::max(1.0, std::abs(z)))
                return phi32_balanced(N[0], N[1], N[2], D[0], D[1], q, pol);
        }
        return phi_eval(spec, pol);
    }
    if (r == 2 && s == 1)
        return phi21_cont(N[0], N[1], D[0], z, q, pol);

    std::vector<Evaluator> cands;
    cands.push_back(direct_eval(spec, pol));
    if (r == 2 && s == 2) {
        // 2phi2(a, c/b; c, az; bz) = (z)_inf/(az)_inf 2phi1(a,b;c;z)
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                const cplx al1 = N[i], al2 = N[1 - i];
                const cplx be1 = D[j], be2 = D[1 - j];
                if (al1 == cplx{0.0, 0.0} || al2 == cplx{0.0, 0.0})
                    continue;
                const cplx w = be1 * be2 / (al1 * al2);
                if (std::abs(w - z) > 1e-12 * std::max(1.0, std::abs(z)))
                    continue;
                const cplx zz = be2 / al1;
                const cplx bb = be1 / al2;
                cands.push_back([=]() -> std::optional<SeriesValue> {
                    try {
                        auto pre = product_ratio({zz}, {al1 * zz}, q, pol);
                        if (!pre)
                            return std::nullopt;
                        SeriesValue inner = phi21_cont(al1, bb, be1, zz, q, pol);
                        inner.value *= pre->m;
                        inner.log_scale += pre->l;
                        inner.route = "jackson-inverse/" + inner.route;
                        if (!finite(inner.value))
                            return std::nullopt;
                        fold(inner);
                        return inner;
                    } catch (const Error&) {
                        return std::nullopt;
                    }
                });
            }
        }
    } else if (r == 1 && s == 1) {
        const cplx a = N[0], c = D[0];
        if (c != cplx{0.0, 0.0})
            cands.push_back(pieces_eval({Piece{{z}, {c}, 1.0, {z * a / c}, {z}, c}}, q, pol, "phi11-swap"));
        else
            cands.push_back(pieces_eval({Piece{{z}, {}, 1.0, {}, {z}, a * z}}, q, pol, "phi11-to-phi01"));
    } else if (r == 0 && s == 1) {
        const cplx c = D[0];
        if (c != cplx{0.0, 0.0})
            cands.push_back(pieces_eval({Piece{{}, {c}, 1.0, {z / c}, {0.0}, c}}, q, pol, "phi01-to-phi11"));
    } else if (r == 1 && s == 0) {
        const cplx a = N[0];
        cands.push_back([=]() -> std::optional<SeriesValue> {
            auto pre = product_ratio({a * z}, {z}, q, pol);
            if (!pre)
                return std::nullopt;
            SeriesValue sv;
            sv.value = pre->m;
            sv.log_scale = pre->l;
            sv.route = "q-binomial";
            fold(sv);
            return sv;
        });
    }
    return pick_best(cands);
}

cplx phi_auto(const std::vector<cplx>& num, const std::vector<cplx>& den, double q, cplx z,
              const TruncationPolicy& pol)
{
    return unscaled(phi_best(SeriesSpec{num, den, q, z}, pol));
}

// ---------------------------------------------------------------------------

const char* to_string(TransformId id)
{
    switch (id) {
    case TransformId::BalancedEA: return "balanced-e-over-a";
    case TransformId::BalancedB: return "balanced-b";
    case TransformId::Heine: return "heine";
    case TransformId::Jackson: return "jackson";
    case TransformId::ConfluentB0: return "confluent-b0";
    case TransformId::ConfluentB0Phi11: return "confluent-b0-phi11";
    case TransformId::Phi11Swap: return "phi11-swap";
    case TransformId::Phi11Zero: return "phi11-zero";
    case TransformId::Phi01ToPhi11: return "phi01-to-phi11";
    case TransformId::QBinomial: return "q-binomial";
    }
    return "unknown";
}

namespace {

cplx direct(std::vector<cplx> num, std::vector<cplx> den, double q, cplx z, const TruncationPolicy& pol)
{
    return phi_eval(SeriesSpec{std::move(num), std::move(den), q, z}, pol).value;
}

cplx pinf(std::initializer_list<cplx> nums, std::initializer_list<cplx> dens, double q, const TruncationPolicy& pol)
{
    cplx r = 1.0;
    for (auto v : nums)
        r *= qpoch_inf(v, q, pol);
    for (auto v : dens) {
        cplx d = qpoch_inf(v, q, pol);
        if (d == cplx{0.0, 0.0})
            throw Error(ErrorKind::ZeroDivisor, "vanishing infinite product in denominator");
        r /= d;
    }
    return r;
}

void need(const std::vector<cplx>& p, std::size_t n, TransformId id)
{
    if (p.size() != n)
        throw Error(ErrorKind::InvalidArgument, std::string("wrong parameter count for ") + to_string(id));
}

} // namespace

TransformSides transform_check(TransformId id, const std::vector<cplx>& p, double q, const TruncationPolicy& pol)
{
    check_base(q);
    switch (id) {
    case TransformId::BalancedEA: {
        need(p, 5, id);
        const cplx a = p[0], b = p[1], c = p[2], d = p[3], e = p[4];
        cplx lhs = direct({a, b, c}, {d, e}, q, d * e / (a * b * c), pol);
        cplx rhs = pinf({e / a, d * e / (b * c)}, {e, d * e / (a * b * c)}, q, pol) *
                   direct({a, d / b, d / c}, {d, d * e / (b * c)}, q, e / a, pol);
        return {lhs, rhs};
    }
    case TransformId::BalancedB: {
        need(p, 5, id);
        const cplx a = p[0], b = p[1], c = p[2], d = p[3], e = p[4];
        cplx lhs = direct({a, b, c}, {d, e}, q, d * e / (a * b * c), pol);
        cplx rhs = pinf({b, d * e / (a * b), d * e / (b * c)}, {d, e, d * e / (a * b * c)}, q, pol) *
                   direct({d / b, e / b, d * e / (a * b * c)}, {d * e / (a * b), d * e / (b * c)}, q, b, pol);
        return {lhs, rhs};
    }
    case TransformId::Heine: {
        need(p, 4, id);
        const cplx a = p[0], b = p[1], c = p[2], z = p[3];
        cplx lhs = direct({a, b}, {c}, q, z, pol);
        cplx rhs = pinf({b, a * z}, {c, z}, q, pol) * direct({c / b, z}, {a * z}, q, b, pol);
        return {lhs, rhs};
    }
    case TransformId::Jackson: {
        need(p, 4, id);
        const cplx a = p[0], b = p[1], c = p[2], z = p[3];
        cplx lhs = direct({a, b}, {c}, q, z, pol);
        cplx rhs = pinf({a * z}, {z}, q, pol) * direct({a, c / b}, {c, a * z}, q, b * z, pol);
        return {lhs, rhs};
    }
    case TransformId::ConfluentB0: {
        need(p, 3, id);
        const cplx a = p[0], c = p[1], z = p[2];
        cplx lhs = pinf({z}, {a * z}, q, pol) * direct({a, 0.0}, {c}, q, z, pol);
        cplx rhs = direct({a}, {c, a * z}, q, c * z, pol);
        return {lhs, rhs};
    }
    case TransformId::ConfluentB0Phi11: {
        need(p, 3, id);
        const cplx a = p[0], c = p[1], z = p[2];
        cplx lhs = pinf({z}, {a * z}, q, pol) * direct({a, 0.0}, {c}, q, z, pol);
        cplx rhs = pinf({}, {c}, q, pol) * direct({z}, {a * z}, q, c, pol);
        return {lhs, rhs};
    }
    case TransformId::Phi11Swap: {
        need(p, 3, id);
        const cplx b = p[0], c = p[1], z = p[2];
        cplx lhs = direct({c / b}, {c}, q, b * z, pol);
        cplx rhs = pinf({b * z}, {c}, q, pol) * direct({z}, {b * z}, q, c, pol);
        return {lhs, rhs};
    }
    case TransformId::Phi11Zero: {
        need(p, 2, id);
        const cplx c = p[0], z = p[1];
        cplx lhs = direct({0.0}, {c}, q, z, pol);
        cplx rhs = pinf({z}, {c}, q, pol) * direct({0.0}, {z}, q, c, pol);
        return {lhs, rhs};
    }
    case TransformId::Phi01ToPhi11: {
        need(p, 2, id);
        const cplx c = p[0], z = p[1];
        cplx lhs = direct({}, {c}, q, c * z, pol);
        cplx rhs = pinf({}, {c}, q, pol) * direct({z}, {0.0}, q, c, pol);
        return {lhs, rhs};
    }
    case TransformId::QBinomial: {
        need(p, 2, id);
        const cplx a = p[0], z = p[1];
        cplx lhs = direct({a}, {}, q, z, pol);
        cplx rhs = pinf({a * z}, {z}, q, pol);
        return {lhs, rhs};
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown transform");
}

} // namespace qdh
