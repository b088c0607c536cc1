#include "qdh/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

#include "qdh/quadrature.hpp"

namespace qdh {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxFailures = 50;

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class Draws {
public:
    Draws(std::uint64_t seed, const std::string& salt) : rng_(seed ^ fnv1a(salt)) {}
    // uniform on (0.1, 0.9)
    double u() { return par_(rng_); }
    double unit() { return unit_(rng_); }
    double sign() { return unit_(rng_) < 0.5 ? -1.0 : 1.0; }
    // complex point with modulus in (0.1, 0.9)
    cplx disk() { return std::polar(u(), 2.0 * kPi * unit()); }
    // off-cut point (in x units for spectral families)
    cplx point() { return {sign() * (1.5 + 4.0 * unit()), 2.0 * unit() - 1.0}; }

    static constexpr double kPi = 3.14159265358979323846;

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> par_{0.1, 0.9};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

std::string num(cplx v)
{
    char buf[64];
    if (v.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
    else
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

std::string kv(std::initializer_list<std::pair<const char*, cplx>> items)
{
    std::string s;
    for (const auto& [k, v] : items) {
        if (!s.empty())
            s += ' ';
        s += k;
        s += '=';
        s += num(v);
    }
    return s;
}

std::string describe(const FamilyParams& p, const std::vector<std::string>& names)
{
    std::string s = "q=" + num(p.q);
    for (const auto& n : names) {
        cplx v = n == "A" ? p.A : n == "B" ? p.B : n == "C" ? p.C : n == "D" ? p.D : n == "delta" ? p.delta : p.a;
        s += ' ' + n + '=' + num(v);
    }
    return s;
}

std::string describe(const CDQHParams& p)
{
    return kv({{"q", p.q}, {"A", p.A}, {"B", p.B}, {"C", p.C}, {"D", p.D}});
}

// 1 - v q^k within tol of zero for some k
bool hits_pole(cplx v, double q, double tol = 1e-6)
{
    cplx t = v;
    for (int k = 0; k < 400 && std::abs(t) > 1e-3; ++k, t *= q)
        if (std::abs(1.0 - t) < tol)
            return true;
    return false;
}

bool any_pole(std::initializer_list<cplx> vs, double q)
{
    for (cplx v : vs)
        if (hits_pole(v, q))
            return true;
    return false;
}

CDQHParams cdqh_of(const FamilyParams& p) { return CDQHParams{p.q, p.A, p.B, p.C, p.D}; }

CDQHParams draw_cdqh(Draws& d)
{
    for (;;) {
        CDQHParams p{d.u(), d.u(), d.u(), d.u(), d.u()};
        const cplx A = p.A, B = p.B, C = p.C, D = p.D;
        // coinciding parameters make the transformation prefactors singular
        bool close = false;
        for (cplx x : {A, B, C, D})
            for (cplx y : {A, B, C, D})
                if (&x != &y && x != y && std::abs(x - y) < 1e-6)
                    close = true;
        if (close || any_pole({A / p.q, B / p.q, C / p.q, D / p.q}, p.q))
            continue;
        return p;
    }
}

// x point off the cut turned into z = x / alpha
SpectralPoint draw_point(Draws& d, const CDQHParams& p)
{
    cplx x = d.point();
    return spectral_point(p, x / cdqh_alpha(p));
}

CheckReport make(const std::string& id, std::uint64_t seed, double threshold)
{
    CheckReport r;
    r.check_id = id;
    r.seed = seed;
    r.threshold = threshold;
    return r;
}

cplx phi(cplx a, cplx b, cplx c, cplx d, cplx e, double q) { return phi32(a, b, c, d, e, q); }

double rel_terms(std::initializer_list<cplx> ts, cplx& sum, cplx& largest)
{
    sum = 0.0;
    double m = 0.0;
    for (cplx t : ts) {
        sum += t;
        if (std::abs(t) > m) {
            m = std::abs(t);
            largest = t;
        }
    }
    return m == 0.0 ? 0.0 : std::abs(sum) / m;
}

} // namespace

void CheckReport::record(double err, const std::string& inputs, cplx lhs, cplx rhs)
{
    ++points_tested;
    if (std::isnan(err))
        err = std::numeric_limits<double>::infinity();
    max_rel_error = std::max(max_rel_error, err);
    if (!(err <= threshold)) {
        passed = false;
        if (failures.size() < kMaxFailures)
            failures.push_back({inputs, lhs, rhs});
    }
}

void CheckReport::record_error(const std::string& inputs, const std::string& what)
{
    ++points_tested;
    max_rel_error = std::numeric_limits<double>::infinity();
    passed = false;
    if (failures.size() < kMaxFailures)
        failures.push_back({inputs + " error=" + what, {kNaN, kNaN}, {kNaN, kNaN}});
}

double rel_diff(cplx lhs, cplx rhs)
{
    double m = std::max(std::abs(lhs), std::abs(rhs));
    if (m == 0.0)
        return 0.0;
    return std::abs(lhs - rhs) / m;
}

namespace {

nlohmann::json cjson(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

nlohmann::json report_json(const CheckReport& r)
{
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : r.failures)
        f.push_back({{"inputs", x.inputs}, {"lhs", cjson(x.lhs)}, {"rhs", cjson(x.rhs)}});
    return {{"check_id", r.check_id}, {"seed", r.seed},         {"points", r.points_tested},
            {"max_rel_error", r.max_rel_error}, {"threshold", r.threshold}, {"pass", r.passed},
            {"failures", f}};
}

} // namespace

std::string to_json(const CheckReport& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<CheckReport>& rs)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs)
        a.push_back(report_json(r));
    return a.dump(2);
}

std::string to_text(const CheckReport& r)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s points=%ld max_rel_error=%.3e threshold=%.1e seed=%llu\n",
                  r.passed ? "PASS" : "FAIL", r.check_id.c_str(), r.points_tested, r.max_rel_error, r.threshold,
                  static_cast<unsigned long long>(r.seed));
    std::string s = buf;
    for (const auto& f : r.failures)
        s += "  " + f.inputs + " lhs=" + num(f.lhs) + " rhs=" + num(f.rhs) + "\n";
    return s;
}

const char* to_string(Contiguous c)
{
    switch (c) {
    case Contiguous::AUpAllUp: return "a-up-all-up";
    case Contiguous::AllUpADown: return "all-up-a-down";
    case Contiguous::ACross: return "a-across";
    case Contiguous::AShift: return "a-shift";
    case Contiguous::AllShift: return "all-shift";
    }
    return "?";
}

namespace {

// the three terms of a contiguous relation at (a,b,c,d,e)
std::array<cplx, 3> contiguous_terms(Contiguous rel, cplx a, cplx b, cplx c, cplx d, cplx e, double q)
{
    const cplx w = d * e / (a * b * c);
    switch (rel) {
    case Contiguous::AUpAllUp:
        return {phi(a, b, c, d, e, q), -phi(a * q, b, c, d, e, q),
                (1.0 - b) * (1.0 - c) / ((1.0 - d) * (1.0 - e)) * w / q * phi(a * q, b * q, c * q, d * q, e * q, q)};
    case Contiguous::AllUpADown:
        return {(1.0 - d) * (1.0 - e) * phi(a, b, c, d, e, q),
                (d - a) * (1.0 - e / a) * phi(a, b * q, c * q, d * q, e * q, q),
                -(1.0 - a) * (1.0 - w / q) * phi(a * q, b * q, c * q, d * q, e * q, q)};
    case Contiguous::ACross:
        return {(1.0 - b) * (1.0 - c) * (1.0 - d / a) * (1.0 - e / a) / ((1.0 - d) * (1.0 - e)) * d * e / (b * c * q) *
                    phi(a, b * q, c * q, d * q, e * q, q),
                -((1.0 - a) * (1.0 - w / q) + a * (1.0 - d / (a * q)) * (1.0 - e / (a * q)) +
                  w / q * (1.0 - b) * (1.0 - c)) *
                    phi(a, b, c, d, e, q),
                (1.0 - d / q) * (1.0 - e / q) * phi(a, b / q, c / q, d / q, e / q, q)};
    case Contiguous::AShift:
        return {(d * e * (a - b - c) + a * b * c * (d + e + q - a - a * q)) * phi(a, b, c, d, e, q),
                (1.0 - a) * (d * e - a * b * c * q) * phi(a * q, b, c, d, e, q),
                b * c * (d - a) * (e - a) * phi(a / q, b, c, d, e, q)};
    case Contiguous::AllShift:
        return {(1.0 - a) * (1.0 - b) * (1.0 - c) / ((1.0 - d) * (1.0 - e)) * w / q * (d * e - a * b * c * q) *
                    phi(a * q, b * q, c * q, d * q, e * q, q),
                (a * b * c * (d + e - q) + d * e * (1.0 + q - a - b - c)) * phi(a, b, c, d, e, q),
                a * b * c * q * (1.0 - d / q) * (1.0 - e / q) * phi(a / q, b / q, c / q, d / q, e / q, q)};
    }
    throw Error(ErrorKind::InvalidArgument, "unknown contiguous relation");
}

void contiguous_point(CheckReport& r, Contiguous rel, cplx a, cplx b, cplx c, cplx d, cplx e, double q)
{
    const std::string in = kv({{"q", q}, {"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}});
    try {
        auto t = contiguous_terms(rel, a, b, c, d, e, q);
        cplx sum, largest;
        double err = rel_terms({t[0], t[1], t[2]}, sum, largest);
        r.record(err, in, sum, largest);
    } catch (const Error& x) {
        r.record_error(in, x.what());
    }
}

} // namespace

CheckReport check_contiguous(Contiguous rel, int samples, std::uint64_t seed, double q)
{
    CheckReport r = make(std::string("contiguous:") + to_string(rel), seed, 1e-9);
    Draws d(seed, r.check_id);
    int done = 0;
    for (long tries = 0; done < samples && tries < 1000000; ++tries) {
        cplx a = d.u(), b = d.u(), c = d.u(), dd = d.u(), e = d.u();
        // every series in the relations has argument at most de/(abcq)
        if (std::abs(dd * e / (a * b * c * q)) > 0.9)
            continue;
        if (any_pole({dd, e, dd * q, e * q, dd / q, e / q}, q))
            continue;
        contiguous_point(r, rel, a, b, c, dd, e, q);
        ++done;
    }
    // degenerate b = d and a terminating draw
    contiguous_point(r, rel, 0.8, 0.3, 0.7, 0.3, 0.2, q);
    contiguous_point(r, rel, 0.6, std::pow(q, -3.0), 0.7, 0.35, 0.45, q);
    return r;
}

CheckReport check_three_term_transform(int samples, std::uint64_t seed)
{
    CheckReport r = make("three-term", seed, 1e-8);
    Draws d(seed, r.check_id);
    int done = 0;
    for (long tries = 0; done < samples && tries < 100000; ++tries) {
        CDQHParams p = draw_cdqh(d);
        // (A/C)_inf vanishes structurally when A = C
        if (std::abs(p.A - p.C) < 1e-6)
            continue;
        SpectralPoint pt = draw_point(d, p);
        ++done;
        for (long n = 0; n <= 10; ++n) {
            std::string in = describe(p) + " z=" + num(pt.z) + " n=" + std::to_string(n);
            try {
                auto s = three_term_relation(p, pt, n);
                r.record(rel_diff(s.lhs, s.rhs), in, s.lhs, s.rhs);
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_c_eq_q_reduction(int samples, std::uint64_t seed)
{
    CheckReport r = make("c-eq-q", seed, 1e-9);
    Draws d(seed, r.check_id);
    for (int s = 0; s < samples; ++s) {
        CDQHParams p = draw_cdqh(d);
        p.C = p.q;
        SpectralPoint pt = draw_point(d, p);
        const cplx k = 2.0 * pt.alpha;
        for (long n = 0; n <= 10; ++n) {
            std::string in = describe(p) + " z=" + num(pt.z) + " n=" + std::to_string(n);
            try {
                cplx x2 = solution(p, pt, Solution::X2, n);
                cplx two = x2_two_term(p, pt, n);
                cplx one = x2_ceqq(p, pt, n);
                r.record(rel_diff(two, x2), in + " two-term", two, x2);
                r.record(rel_diff(one, two), in + " single", one, two);
                cplx P = monic_poly(p.at(pt.z), n);
                cplx m = dual_qhahn_reduction(p, pt, n, DualQHahnForm::Monic);
                cplx aw = dual_qhahn_reduction(p, pt, n, DualQHahnForm::AskeyWilson);
                r.record(rel_diff(m, P), in + " monic", m, P);
                cplx kp = std::pow(k, static_cast<double>(n)) * P;
                r.record(rel_diff(aw, kp), in + " askey-wilson", aw, kp);
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

namespace {

struct WeightSetup {
    std::function<double(double)> w;
    std::function<cplx(double)> z;
};

WeightSetup weight_setup(Family f, const FamilyParams& p)
{
    if (f == Family::CDQH) {
        CDQHParams c = cdqh_of(p);
        c.validate();
        const cplx al = cdqh_alpha(c);
        return {[c](double x) { return weight(c, x, WeightForm::Closed); }, [al](double x) { return x / al; }};
    }
    if (f != Family::AlSalamChihara && f != Family::ContQHermite && f != Family::ContBigQHermite)
        throw Error(ErrorKind::UnsupportedFamily, std::string("no weight for ") + to_string(f));
    const cplx g = limit_gamma(f, p);
    return {[f, p](double x) { return limit_weight(f, p, x, LimitWeightForm::Closed); },
            [g](double x) { return g * x; }};
}

using Gram = std::vector<std::vector<double>>;

Gram gram(Family f, const FamilyParams& p, const WeightSetup& ws, const QuadRule& rule, int n_max)
{
    Gram G(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double wx = ws.w(x) * rule.weights[i];
        SolutionSequence P = forward_eval(CoefficientFamily{f, p, ws.z(x)}, 0.0, 1.0, n_max);
        for (int m = 0; m <= n_max; ++m)
            for (int n = 0; n <= m; ++n)
                G[m][n] += P.at(m).real() * P.at(n).real() * wx;
    }
    for (int m = 0; m <= n_max; ++m)
        for (int n = m + 1; n <= n_max; ++n)
            G[m][n] = G[n][m];
    return G;
}

double normalized(const Gram& G, int m, int n) { return G[m][n] / std::sqrt(G[m][m] * G[n][n]); }

} // namespace

CheckReport check_orthogonality(Family f, const FamilyParams& p, const OrthogonalityOptions& opt)
{
    CheckReport r = make(std::string("orthogonality:") + to_string(f), 0, opt.threshold);
    const WeightSetup ws = weight_setup(f, p);
    const std::string base = describe(p, f == Family::CDQH ? std::vector<std::string>{"A", "B", "C", "D"}
                                                           : required_params(f));
    const int N = opt.nodes;
    std::map<Quadrature, Gram> fine;
    for (Quadrature qd : {Quadrature::GaussLegendre, Quadrature::CosMidpoint}) {
        auto rule = [&](int n) { return qd == Quadrature::GaussLegendre ? gauss_legendre(n) : cos_midpoint(n); };
        Gram g1 = gram(f, p, ws, rule(N), opt.n_max);
        Gram g2 = gram(f, p, ws, rule(2 * N), opt.n_max);
        double moved = 0.0;
        for (int m = 0; m <= opt.n_max; ++m) {
            if (!(g2[m][m] > 0.0))
                throw Error(ErrorKind::QuadratureNotConverged, "Gram diagonal is not positive");
            for (int n = 0; n <= opt.n_max; ++n)
                moved = std::max(moved, std::abs(normalized(g1, m, n) - normalized(g2, m, n)));
        }
        if (moved > opt.threshold)
            throw Error(ErrorKind::QuadratureNotConverged, "doubling the nodes moved the Gram matrix by " +
                                                               num(moved));
        const char* name = qd == Quadrature::GaussLegendre ? "gauss-legendre" : "cos-midpoint";
        for (int m = 0; m <= opt.n_max; ++m)
            for (int n = 0; n < m; ++n)
                r.record(std::abs(normalized(g2, m, n)),
                         base + " quad=" + name + " m=" + std::to_string(m) + " n=" + std::to_string(n), g2[m][n],
                         0.0);
        fine[qd] = std::move(g2);
    }
    const Gram& a = fine[Quadrature::GaussLegendre];
    const Gram& b = fine[Quadrature::CosMidpoint];
    for (int m = 0; m <= opt.n_max; ++m)
        for (int n = 0; n <= m; ++n) {
            double scale = std::sqrt(a[m][m] * a[n][n]);
            r.record(std::abs(a[m][n] - b[m][n]) / scale,
                     base + " agreement m=" + std::to_string(m) + " n=" + std::to_string(n), a[m][n], b[m][n]);
        }
    return r;
}

bool cf_pole_free(const CDQHParams& p, double x_max, int points)
{
    try {
        for (int side : {1, -1}) {
            for (int i = 0; i <= points; ++i) {
                // log grid in x - 1 from 1e-6 to x_max
                double t = std::exp(std::log(1e-6) + (std::log(x_max) - std::log(1e-6)) * i / points);
                double x = side * (1.0 + t);
                cplx v = cf_stieltjes(p, spectral_point_x(p, x), CfForm::Ratio);
                if (!(v.real() * side > 0.0) || !std::isfinite(v.real()))
                    return false;
            }
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

CDQHParams pole_free_associated(std::uint64_t seed)
{
    auto positive = [](const CDQHParams& p) {
        FamilyParams f = p.family();
        for (long n = 1; n <= 200; ++n) {
            Coeffs c = coeffs(Family::CDQH, f, n);
            if (!(c.b2.real() > 0.0) || std::abs(c.b2.imag()) > 0.0)
                return false;
        }
        return true;
    };
    CDQHParams p{0.5, 0.4, 0.4, 0.7, 0.4};
    if (positive(p) && cf_pole_free(p))
        return p;
    Draws d(seed, "pole-free-associated");
    for (int i = 0; i < 1000; ++i) {
        p = draw_cdqh(d);
        if (std::abs(p.C - p.q) < 0.05)
            continue;
        if (positive(p) && cf_pole_free(p))
            return p;
    }
    throw Error(ErrorKind::InvalidArgument, "no pole-free associated draw found");
}

CheckReport check_symmetries(const CDQHParams& p, int n_max, int points, std::uint64_t seed)
{
    CheckReport r = make("symmetries", seed, 1e-9);
    Draws d(seed, r.check_id);
    for (int i = 0; i < points; ++i) {
        SpectralPoint pt = draw_point(d, p);
        for (long n = 0; n <= n_max; ++n) {
            std::string in = describe(p) + " z=" + num(pt.z) + " n=" + std::to_string(n);
            try {
                const cplx base = explicit_poly(p, pt, n);
                std::array<cplx, 4> v{p.A, p.B, p.C, p.D};
                std::array<int, 4> idx{0, 1, 2, 3};
                do {
                    CDQHParams s{p.q, v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]};
                    cplx e = explicit_poly(s, spectral_point(s, pt.z), n);
                    r.record(rel_diff(e, base),
                             in + " perm=" + std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]) +
                                 std::to_string(idx[3]),
                             e, base);
                } while (std::next_permutation(idx.begin(), idx.end()));
                cplx a = explicit_poly_ir(p, pt, n, pt.u), b = explicit_poly_ir(p, pt, n, 1.0 / pt.u);
                r.record(rel_diff(a, b), in + " u<->1/u symmetric sum", a, b);
                cplx c = explicit_poly(p, pt, n, 1.0 / pt.u);
                r.record(rel_diff(c, base), in + " u<->1/u", c, base);
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_limits_all(const std::vector<double>& grow, const std::vector<double>& shrink)
{
    // each step must shrink the deviation
    CheckReport r = make("limits", 0, std::nextafter(1.0, 0.0));
    FamilyParams c;
    c.q = 0.5;
    c.A = 0.35;
    c.B = 0.45;
    c.C = 0.55;
    c.D = 0.65;
    c.delta = 0.4;
    c.a = 0.3;
    const cplx z(0.7, 0.2);
    for (const auto& e : limit_edges()) {
        const auto& sc = e.to_zero ? shrink : grow;
        std::string in = std::string("edge=") + e.name + " z=" + num(z);
        try {
            auto dev = limit_convergence(e.id, c, sc, 3, z);
            for (std::size_t i = 1; i < dev.size(); ++i)
                r.record(dev[i] / dev[i - 1], in + " scale=" + num(sc[i]), dev[i], dev[i - 1]);
            auto zero = limit_convergence(e.id, c, sc, 0, z);
            for (double v : zero)
                if (v != 0.0)
                    r.record_error(in + " n=0", "deviation " + num(v) + " is not zero");
        } catch (const Error& x) {
            r.record_error(in, x.what());
        }
    }
    return r;
}

CheckReport check_solutions(Family f, int samples, std::uint64_t seed)
{
    CheckReport r = make(std::string("solutions:") + to_string(f), seed, 1e-9);
    Draws d(seed, r.check_id);
    if (f == Family::CDQH) {
        for (int s = 0; s < samples; ++s) {
            CDQHParams p = draw_cdqh(d);
            SpectralPoint pt = draw_point(d, p);
            for (Solution w : {Solution::X1Minus, Solution::X1Plus, Solution::X2, Solution::X3, Solution::X4,
                               Solution::X5, Solution::X6}) {
                std::string in = describe(p) + " z=" + num(pt.z) + " solution=" + to_string(w);
                try {
                    SolutionSequence seq = solution_sequence(p, pt, w, 0, 27);
                    double worst = 0.0;
                    for (long n = 1; n <= 25; ++n)
                        worst = std::max(worst, relative_residual(p.at(pt.z), seq, n));
                    r.record(worst, in, worst, 0.0);
                } catch (const Error& x) {
                    r.record_error(in, x.what());
                }
            }
        }
        return r;
    }
    const auto names = required_params(f);
    for (int s = 0; s < samples; ++s) {
        FamilyParams p;
        p.q = d.u();
        p.A = d.u();
        p.B = d.u();
        p.C = d.u();
        p.delta = d.u();
        p.a = d.u();
        const cplx z(1.5 + 4.0 * d.unit(), 2.0 * d.unit() - 1.0);
        for (const auto& info : limit_solution_catalog(f)) {
            FamilyParams pp = p;
            // formal entries terminate at A = q
            if (info.formal)
                pp.A = pp.q;
            std::string in = describe(pp, names) + " z=" + num(z) + " solution=" + info.label;
            try {
                SolutionSequence seq = limit_solution_sequence(f, pp, z, info.label, 0, 27);
                double worst = 0.0;
                for (long n = 1; n <= 25; ++n)
                    worst = std::max(worst, relative_residual(CoefficientFamily{f, pp, z}, seq, n));
                r.record(worst, in, worst, 0.0);
            } catch (const Error& x) {
                if (info.formal && x.kind() == ErrorKind::FormalOnly)
                    continue;
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_pincherle(int points, std::uint64_t seed)
{
    CheckReport r = make("pincherle", seed, 1e-8);
    Draws d(seed, r.check_id);
    for (int i = 0; i < points; ++i) {
        CDQHParams p = draw_cdqh(d);
        SpectralPoint pt = draw_point(d, p);
        std::string in = describe(p) + " z=" + num(pt.z);
        try {
            cplx tr = 1.0 / cf_truncated(p.at(pt.z), 400);
            cplx pin = cf_stieltjes(p, pt, CfForm::Pincherle);
            r.record(rel_diff(pin, tr), in + " minimal-vs-truncated", pin, tr);
            cplx a = cf_stieltjes(p, pt, CfForm::Ratio), b = cf_stieltjes(p, pt, CfForm::RatioAlt);
            r.record(rel_diff(a, b), in + " ratio-forms", a, b);
            CDQHParams c = p;
            c.C = c.q;
            SpectralPoint pc = spectral_point(c, pt.x / cdqh_alpha(c));
            cplx e = cf_stieltjes(c, pc, CfForm::CeqQ), f = cf_stieltjes(c, pc, CfForm::CeqQProducts);
            r.record(rel_diff(e, f), describe(c) + " z=" + num(pc.z) + " c-eq-q-forms", e, f);
        } catch (const Error& x) {
            r.record_error(in, x.what());
        }
    }
    return r;
}

CheckReport check_explicit_poly(int samples, std::uint64_t seed)
{
    CheckReport r = make("explicit-poly", seed, 1e-9);
    Draws d(seed, r.check_id);
    for (int s = 0; s < samples; ++s) {
        CDQHParams p = draw_cdqh(d);
        // anywhere in the plane, cut included
        cplx x(4.0 * d.unit() - 2.0, 2.0 * d.unit() - 1.0);
        SpectralPoint pt = spectral_point(p, x / cdqh_alpha(p));
        try {
            SolutionSequence P = forward_eval(p.at(pt.z), 0.0, 1.0, 10);
            for (long n = 0; n <= 10; ++n) {
                std::string in = describe(p) + " z=" + num(pt.z) + " n=" + std::to_string(n);
                cplx a = explicit_poly(p, pt, n), b = explicit_poly_ir(p, pt, n);
                r.record(rel_diff(a, P.at(n)), in + " double-sum", a, P.at(n));
                r.record(rel_diff(b, P.at(n)), in + " symmetric-sum", b, P.at(n));
            }
        } catch (const Error& x) {
            r.record_error(describe(p), x.what());
        }
    }
    return r;
}

CheckReport check_generating_function(int samples, std::uint64_t seed)
{
    CheckReport r = make("generating-function", seed, 1e-9);
    Draws d(seed, r.check_id);
    for (int s = 0; s < samples; ++s) {
        CDQHParams p = draw_cdqh(d);
        cplx x(4.0 * d.unit() - 2.0, 2.0 * d.unit() - 1.0);
        for (bool ceqq : {false, true}) {
            CDQHParams c = p;
            if (ceqq)
                c.C = c.q;
            SpectralPoint pt = spectral_point(c, x / cdqh_alpha(c));
            const cplx k = 2.0 * pt.alpha;
            std::string in = describe(c) + " z=" + num(pt.z);
            try {
                SolutionSequence P = forward_eval(c.at(pt.z), 0.0, 1.0, 8);
                auto G = ceqq ? genfun_ceqq_coeffs(c, pt, 8) : genfun_coeffs(c, pt, 8);
                for (long n = 0; n <= 8; ++n) {
                    cplx den = qpoch(c.A, c.q, n) * (ceqq ? qpoch(c.q, c.q, n) : qpoch(c.D, c.q, n));
                    cplx want = std::pow(k, static_cast<double>(n)) * P.at(n) / den;
                    r.record(rel_diff(G[n], want), in + (ceqq ? " product-form" : "") + " n=" + std::to_string(n),
                             G[n], want);
                }
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_weight_reductions(std::uint64_t seed)
{
    CheckReport r = make("weights", seed, 1e-9);
    Draws d(seed, r.check_id);
    auto grid = [](int i) { return -1.0 + (i + 0.5) / 25.0; };
    for (int s = 0; s < 5; ++s) {
        CDQHParams p = s == 0 ? CDQHParams{0.5, 0.4, 0.4, 0.5, 0.4} : draw_cdqh(d);
        p.C = p.q;
        for (int i = 0; i < 50; ++i) {
            const double x = grid(i);
            std::string in = describe(p) + " x=" + num(x);
            try {
                double a = weight(p, x, WeightForm::Closed), b = weight(p, x, WeightForm::CeqQ);
                r.record(rel_diff(a, b), in, a, b);
            } catch (const Error& e) {
                r.record_error(in, e.what());
            }
        }
    }
    for (int s = 0; s < 5; ++s) {
        FamilyParams p;
        p.q = d.u();
        p.A = p.q;
        p.delta = d.u();
        p.a = d.u();
        for (int i = 0; i < 50; ++i) {
            const double x = grid(i);
            try {
                std::string in = describe(p, required_params(Family::ContQHermite)) + " x=" + num(x);
                auto den = limit_weight_denominators(Family::ContQHermite, p, x);
                r.record(rel_diff(den.first, 1.0), in + " first-denominator", den.first, 1.0);
                r.record(rel_diff(den.second, 1.0), in + " second-denominator", den.second, 1.0);
                double a = limit_weight(Family::ContQHermite, p, x),
                       b = limit_weight(Family::ContQHermite, p, x, LimitWeightForm::Reduced);
                r.record(rel_diff(a, b), in + " reduced", a, b);
            } catch (const Error& e) {
                r.record_error(describe(p, required_params(Family::ContQHermite)) + " x=" + num(x), e.what());
            }
            std::string in = describe(p, required_params(Family::ContBigQHermite)) + " x=" + num(x);
            try {
                double a = limit_weight(Family::ContBigQHermite, p, x),
                       b = limit_weight(Family::ContBigQHermite, p, x, LimitWeightForm::Reduced);
                r.record(rel_diff(a, b), in + " reduced", a, b);
            } catch (const Error& e) {
                r.record_error(in, e.what());
            }
        }
    }
    return r;
}

namespace {

// parameters for transform_check, or empty when the draw is out of domain
std::vector<cplx> transform_draw(TransformId id, Draws& d, double q)
{
    switch (id) {
    case TransformId::BalancedEA: {
        cplx a = d.u(), b = d.u(), c = d.u(), dd = d.u(), e = d.u();
        if (std::abs(dd * e / (a * b * c)) > 0.9 || std::abs(e / a) > 0.9 ||
            any_pole({dd, e, dd * e / (b * c)}, q))
            return {};
        return {a, b, c, dd, e};
    }
    case TransformId::BalancedB: {
        cplx a = d.u(), b = d.u(), c = d.u(), dd = d.u(), e = d.u();
        if (std::abs(dd * e / (a * b * c)) > 0.9 || any_pole({dd, e, dd * e / (a * b), dd * e / (b * c)}, q))
            return {};
        return {a, b, c, dd, e};
    }
    case TransformId::Heine:
    case TransformId::Jackson: {
        cplx a = d.u(), b = d.u(), c = d.u(), z = d.disk();
        if (any_pole({c, a * z, z}, q))
            return {};
        return {a, b, c, z};
    }
    case TransformId::ConfluentB0:
    case TransformId::ConfluentB0Phi11: {
        cplx a = d.u(), c = d.u(), z = d.disk();
        if (any_pole({c, a * z}, q))
            return {};
        return {a, c, z};
    }
    case TransformId::Phi11Swap: {
        cplx b = d.u(), c = d.u(), z = 3.0 * d.disk();
        if (any_pole({c, b * z}, q))
            return {};
        return {b, c, z};
    }
    case TransformId::Phi11Zero: {
        cplx c = d.u(), z = 3.0 * d.disk();
        if (any_pole({c, z}, q))
            return {};
        return {c, z};
    }
    case TransformId::Phi01ToPhi11: {
        cplx c = d.u(), z = 3.0 * d.disk();
        if (any_pole({c}, q))
            return {};
        return {c, z};
    }
    case TransformId::QBinomial:
        return {3.0 * d.disk(), d.disk()};
    }
    return {};
}

} // namespace

CheckReport check_transform(TransformId id, int samples, std::uint64_t seed)
{
    CheckReport r = make(std::string("transform:") + to_string(id), seed, 1e-10);
    Draws d(seed, r.check_id);
    int done = 0;
    for (long tries = 0; done < samples && tries < 1000000; ++tries) {
        const double q = d.u();
        auto p = transform_draw(id, d, q);
        if (p.empty())
            continue;
        ++done;
        std::string in = "q=" + num(q);
        for (std::size_t i = 0; i < p.size(); ++i)
            in += " p" + std::to_string(i) + "=" + num(p[i]);
        try {
            auto s = transform_check(id, p, q);
            r.record(rel_diff(s.lhs, s.rhs), in, s.lhs, s.rhs);
        } catch (const Error& x) {
            r.record_error(in, x.what());
        }
    }
    return r;
}

CheckReport check_asc1_identities(int samples, std::uint64_t seed)
{
    CheckReport r = make("transform:al-salam-carlitz-1", seed, 1e-10);
    Draws d(seed, r.check_id);
    for (int s = 0; s < samples; ++s) {
        FamilyParams p;
        p.q = d.u();
        p.A = p.q;
        p.delta = d.sign() * d.u();
        const cplx z = d.point();
        const long n = static_cast<long>(d.unit() * 13.0);
        std::string in = describe(p, {"A", "delta"}) + " z=" + num(z) + " n=" + std::to_string(n);
        try {
            for (const auto& side : asc1_identity_checks(p, z, n))
                r.record(rel_diff(side.lhs, side.rhs), in + " " + side.name, side.lhs, side.rhs);
        } catch (const Error& x) {
            r.record_error(in, x.what());
        }
    }
    return r;
}

namespace {

FamilyParams draw_family(Draws& d, Family f)
{
    FamilyParams p;
    p.q = d.u();
    p.A = d.u();
    p.B = d.u();
    p.C = d.u();
    p.delta = d.u();
    p.a = d.u();
    if (f == Family::QBesselOrder)
        p.a = -p.a;
    return p;
}

} // namespace

CheckReport check_limit_poly(int samples, std::uint64_t seed)
{
    CheckReport r = make("limit-poly", seed, 1e-9);
    Draws d(seed, r.check_id);
    for (Family f : kAllFamilies) {
        if (f == Family::CDQH)
            continue;
        for (int s = 0; s < samples; ++s) {
            FamilyParams p = draw_family(d, f);
            const cplx z(4.0 * d.unit() - 2.0, 2.0 * d.unit() - 1.0);
            std::string in = std::string(to_string(f)) + " " + describe(p, required_params(f)) + " z=" + num(z);
            try {
                SolutionSequence P = forward_eval(CoefficientFamily{f, p, z}, 0.0, 1.0, 8);
                for (long n = 0; n <= 8; ++n) {
                    cplx v = limit_poly(f, p, z, n);
                    r.record(rel_diff(v, P.at(n)), in + " n=" + std::to_string(n), v, P.at(n));
                    if (f == Family::LimitASC1) {
                        cplx w = limit_poly(f, p, z, n, PolyForm::Simplified);
                        r.record(rel_diff(w, P.at(n)), in + " simplified n=" + std::to_string(n), w, P.at(n));
                    }
                }
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_limit_cf(int samples, std::uint64_t seed)
{
    CheckReport r = make("limit-cf", seed, 1e-8);
    Draws d(seed, r.check_id);
    for (Family f : kAllFamilies) {
        if (f == Family::CDQH)
            continue;
        for (int s = 0; s < samples; ++s) {
            FamilyParams p = draw_family(d, f);
            // one generic real point, the rest complex
            cplx z = s == 0 ? cplx(1.5 + 4.0 * d.unit(), 0.0) : d.point();
            if (has_spectral_scale(f))
                z *= limit_gamma(f, p);
            std::string in = std::string(to_string(f)) + " " + describe(p, required_params(f)) + " z=" + num(z);
            try {
                CfResult cf = cf_adaptive(CoefficientFamily{f, p, z}, 1e-13);
                if (!cf.converged) {
                    r.record_error(in, "truncated fraction did not settle");
                    continue;
                }
                const cplx tr = 1.0 / cf.value;
                cplx v = limit_cf(f, p, z);
                r.record(rel_diff(v, tr), in, v, tr);
                if (f == Family::LimitWall || f == Family::FourthLimit) {
                    cplx w = limit_cf(f, p, z, LimitCfForm::Alternate);
                    r.record(rel_diff(w, tr), in + " alternate", w, tr);
                }
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_fourth_limit_zeros(int count)
{
    // pass/fail per property, recorded as 0 or 1
    CheckReport r = make("zeros:fourth-limit", 0, 0.0);
    for (double q : {0.3, 0.5, 0.8}) {
        for (long n = -1; n <= 2; ++n) {
            std::string in = "q=" + num(q) + " n=" + std::to_string(n);
            try {
                ZeroList a = fourth_limit_zeros(q, n, count), b = fourth_limit_zeros(q, n + 1, count);
                r.record(a.zeros.size() == static_cast<std::size_t>(count) ? 0.0 : 1.0, in + " count",
                         static_cast<double>(a.zeros.size()), static_cast<double>(count));
                for (double z : a.zeros) {
                    r.record(z < 0.0 ? 0.0 : 1.0, in + " negative z=" + num(z), z, 0.0);
                    // simple: the function changes sign across the zero
                    double lo = fourth_limit_f(q, n, z * (1.0 - 1e-7)), hi = fourth_limit_f(q, n, z * (1.0 + 1e-7));
                    r.record(lo * hi < 0.0 ? 0.0 : 1.0, in + " simple z=" + num(z), lo, hi);
                }
                r.record(interlaces(a.zeros, b.zeros) ? 0.0 : 1.0, in + " interlaces n+1", 0.0, 0.0);
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_regime_interlacing()
{
    CheckReport r = make("zeros:regimes", 0, 0.0);
    struct Case {
        Family f;
        FamilyParams p;
    };
    std::vector<Case> cases;
    for (double q : {0.3, 0.5, 0.8}) {
        FamilyParams a;
        a.q = q;
        a.A = 0.6;
        a.delta = -0.8;
        cases.push_back({Family::AlSalamCarlitz1, a});
        FamilyParams l;
        l.q = q;
        l.delta = 0.7;
        cases.push_back({Family::LimitASC1, l});
        FamilyParams b;
        b.q = q;
        b.a = -0.8;
        cases.push_back({Family::QBesselOrder, b});
        FamilyParams h;
        h.q = q;
        h.delta = -0.6;
        cases.push_back({Family::LimitQHermite, h});
    }
    for (const auto& c : cases) {
        std::string in = std::string(to_string(c.f)) + " " + describe(c.p, required_params(c.f));
        try {
            r.record(in_positive_regime(c.f, c.p) ? 0.0 : 1.0, in + " regime", 0.0, 0.0);
            RegimePair rp = regime_pair(c.f, c.p);
            std::size_t total = 0;
            for (int side : {-1, 1}) {
                const double lo = side < 0 ? -20.0 : 0.02, hi = side < 0 ? -0.02 : 20.0;
                ZeroList zn = find_zeros(rp.num, lo, hi), zd = find_zeros(rp.den, lo, hi);
                total += zn.zeros.size() + zd.zeros.size();
                if (zn.zeros.empty() && zd.zeros.empty())
                    continue;
                r.record(interlaces(zn.zeros, zd.zeros) ? 0.0 : 1.0,
                         in + (side < 0 ? " negative" : " positive") + " half-line", static_cast<double>(zn.zeros.size()),
                         static_cast<double>(zd.zeros.size()));
            }
            r.record(total >= 4 ? 0.0 : 1.0, in + " zeros found", static_cast<double>(total), 4.0);
        } catch (const Error& x) {
            r.record_error(in, x.what());
        }
    }
    return r;
}

CheckReport check_partial_fractions(int points)
{
    CheckReport r = make("partial-fractions", 0, 1e-8);
    for (double dl : {-0.7, 0.3}) {
        FamilyParams p;
        p.q = 0.5;
        p.A = 0.5;
        p.delta = dl;
        for (int i = 0; i < points; ++i) {
            const cplx z(2.5 + 0.3 * i - 1.5 * (i % 3), 0.2 * i - 0.9);
            std::string in = describe(p, {"A", "delta"}) + " z=" + num(z);
            try {
                cplx s = asc1_partial_fractions(p, z), c = limit_cf(Family::AlSalamCarlitz1, p, z);
                r.record(rel_diff(s, c), in, s, c);
            } catch (const Error& x) {
                r.record_error(in, x.what());
            }
        }
    }
    return r;
}

CheckReport check_qbessel_connection(long n_max)
{
    CheckReport r = make("qbessel", 0, 1e-8);
    struct Case {
        double q;
        double a;
        cplx z;
    };
    for (const Case& c : {Case{0.5, -1.0, 2.3}, Case{0.7, -0.5, {1.7, 0.4}}, Case{0.3, -2.0, 5.1}}) {
        FamilyParams p;
        p.q = c.q;
        p.a = c.a;
        std::string in = kv({{"q", c.q}, {"a", c.a}, {"z", c.z}});
        try {
            ConnectionRatios cr = qbessel_connection(p, c.z, n_max);
            for (std::size_t n = 1; n < cr.first.size(); ++n) {
                r.record(rel_diff(cr.first[n], cr.first[0]), in + " first n=" + std::to_string(n), cr.first[n],
                         cr.first[0]);
                r.record(rel_diff(cr.second[n], cr.second[0]), in + " second n=" + std::to_string(n), cr.second[n],
                         cr.second[0]);
            }
        } catch (const Error& x) {
            r.record_error(in, x.what());
        }
    }
    return r;
}

namespace {

using Group = std::function<std::vector<CheckReport>(std::uint64_t)>;

const std::vector<std::pair<std::string, Group>>& groups()
{
    static const std::vector<std::pair<std::string, Group>> g = {
        {"contiguous",
         [](std::uint64_t s) {
             std::vector<CheckReport> v;
             for (Contiguous c : {Contiguous::AUpAllUp, Contiguous::AllUpADown, Contiguous::ACross,
                                  Contiguous::AShift, Contiguous::AllShift})
                 v.push_back(check_contiguous(c, 100, s));
             return v;
         }},
        {"three-term", [](std::uint64_t s) { return std::vector<CheckReport>{check_three_term_transform(100, s)}; }},
        {"c-eq-q", [](std::uint64_t s) { return std::vector<CheckReport>{check_c_eq_q_reduction(20, s)}; }},
        {"orthogonality",
         [](std::uint64_t s) {
             std::vector<CheckReport> v;
             auto run = [&](Family f, const FamilyParams& p, const std::string& id) {
                 try {
                     CheckReport r = check_orthogonality(f, p);
                     r.check_id += ":" + id;
                     r.seed = s;
                     v.push_back(std::move(r));
                 } catch (const Error& x) {
                     CheckReport r = make(std::string("orthogonality:") + to_string(f) + ":" + id, s, 1e-6);
                     r.record_error(id, x.what());
                     v.push_back(std::move(r));
                 }
             };
             run(Family::CDQH, CDQHParams{0.5, 0.4, 0.4, 0.5, 0.4}.family(), "c-eq-q");
             try {
                 run(Family::CDQH, pole_free_associated(s).family(), "associated");
             } catch (const Error& x) {
                 CheckReport r = make("orthogonality:cdqh:associated", s, 1e-6);
                 r.record_error("pole-free draw", x.what());
                 v.push_back(std::move(r));
             }
             FamilyParams h;
             h.q = 0.5;
             h.A = 0.5;
             h.delta = 0.6;
             run(Family::ContQHermite, h, "a-eq-q");
             FamilyParams b;
             b.q = 0.5;
             b.A = 0.5;
             // a = 0.3 would put a point mass just right of the cut (2/gamma > 1)
             b.a = 2.0;
             run(Family::ContBigQHermite, b, "a-eq-q");
             return v;
         }},
        {"symmetries",
         [](std::uint64_t s) {
             return std::vector<CheckReport>{check_symmetries(CDQHParams{0.5, 0.31, 0.47, 0.63, 0.72}, 8, 6, s)};
         }},
        {"limits", [](std::uint64_t) { return std::vector<CheckReport>{check_limits_all()}; }},
        {"solutions",
         [](std::uint64_t s) {
             std::vector<CheckReport> v;
             for (Family f : kAllFamilies)
                 v.push_back(check_solutions(f, 20, s));
             return v;
         }},
        {"pincherle", [](std::uint64_t s) { return std::vector<CheckReport>{check_pincherle(10, s)}; }},
        {"explicit-poly", [](std::uint64_t s) { return std::vector<CheckReport>{check_explicit_poly(10, s)}; }},
        {"generating-function",
         [](std::uint64_t s) { return std::vector<CheckReport>{check_generating_function(10, s)}; }},
        {"weights", [](std::uint64_t s) { return std::vector<CheckReport>{check_weight_reductions(s)}; }},
        {"transforms",
         [](std::uint64_t s) {
             std::vector<CheckReport> v;
             for (TransformId id :
                  {TransformId::BalancedEA, TransformId::BalancedB, TransformId::Heine, TransformId::Jackson,
                   TransformId::ConfluentB0, TransformId::ConfluentB0Phi11, TransformId::Phi11Swap,
                   TransformId::Phi11Zero, TransformId::Phi01ToPhi11, TransformId::QBinomial})
                 v.push_back(check_transform(id, 100, s));
             v.push_back(check_asc1_identities(100, s));
             return v;
         }},
        {"zeros",
         [](std::uint64_t) {
             return std::vector<CheckReport>{check_fourth_limit_zeros(8), check_regime_interlacing()};
         }},
        {"partial-fractions", [](std::uint64_t) { return std::vector<CheckReport>{check_partial_fractions(10)}; }},
        {"qbessel", [](std::uint64_t) { return std::vector<CheckReport>{check_qbessel_connection(10)}; }},
        {"limit-poly", [](std::uint64_t s) { return std::vector<CheckReport>{check_limit_poly(10, s)}; }},
        {"limit-cf", [](std::uint64_t s) { return std::vector<CheckReport>{check_limit_cf(10, s)}; }},
    };
    return g;
}

} // namespace

std::vector<std::string> check_names()
{
    std::vector<std::string> v;
    for (const auto& g : groups())
        v.push_back(g.first);
    return v;
}

bool is_check_name(const std::string& name)
{
    if (name == "all")
        return true;
    for (const auto& g : groups())
        if (g.first == name)
            return true;
    return false;
}

std::vector<CheckReport> run_check(const std::string& name, std::uint64_t seed)
{
    if (!is_check_name(name))
        throw Error(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
    std::vector<std::future<std::vector<CheckReport>>> jobs;
    for (const auto& g : groups())
        if (name == "all" || name == g.first)
            jobs.push_back(std::async(std::launch::async, g.second, seed));
    std::vector<CheckReport> out;
    for (auto& j : jobs)
        for (auto& r : j.get())
            out.push_back(std::move(r));
    return out;
}

} // namespace qdh
