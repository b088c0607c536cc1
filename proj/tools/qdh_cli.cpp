#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdh/cdqhahn.hpp"
#include "qdh/limits.hpp"
#include "qdh/verify.hpp"

using namespace qdh;

namespace {

constexpr int kOk = 0, kCheckFail = 1, kUsage = 2, kNumeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string fmt(cplx v)
{
    if (v.imag() == 0.0)
        return fmt(v.real());
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

// "1.5", "2i", "-1e-3+2.5i", "0.3-0.1i"
cplx parse_complex(const std::string& s)
{
    static const std::regex num(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
    static const std::regex full(R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)");
    static const std::regex imag(R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)");
    std::smatch m;
    if (std::regex_match(s, num))
        return {std::stod(s), 0.0};
    if (std::regex_match(s, m, full))
        return {std::stod(m[1]), std::stod(m[2])};
    if (std::regex_match(s, m, imag))
        return {0.0, std::stod(m[1])};
    throw UsageError("cannot read '" + s + "' as a number (use re or re+imi)");
}

struct Grid {
    double a = 0, b = 0;
    int count = 0;
    double at(int i) const { return count == 1 ? a : i == count - 1 ? b : a + (b - a) * i / (count - 1); }
};

Grid parse_grid(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, ':');)
        parts.push_back(t);
    if (parts.size() != 3)
        throw UsageError("grid must be a:b:N");
    Grid g;
    try {
        g = {std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2])};
    } catch (const std::exception&) {
        throw UsageError("grid must be a:b:N");
    }
    if (g.count < 1)
        throw UsageError("grid needs at least one point");
    return g;
}

// options shared by the family-aware subcommands
struct FamilyArgs {
    std::string family = "cdqh";
    std::map<std::string, std::string> values;
    std::string params;

    void attach(CLI::App* app)
    {
        app->add_option("--family", family, "family name (cdqh, big-q-laguerre, wall, ...)");
        for (const char* k : {"q", "A", "B", "C", "D", "delta", "a"})
            app->add_option(std::string("--") + k, values[k], std::string("parameter ") + k);
        app->add_option("--params", params, "parameters as k=v,k=v");
    }

    Family id() const
    {
        try {
            return family_from_string(family);
        } catch (const Error&) {
            throw UsageError("unknown family '" + family + "'");
        }
    }

    FamilyParams build() const
    {
        std::map<std::string, std::string> v;
        for (const auto& [k, s] : values)
            if (!s.empty())
                v[k] = s;
        std::stringstream ss(params);
        for (std::string kv; std::getline(ss, kv, ',');) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw UsageError("--params entries must be k=v");
            std::string k = kv.substr(0, eq);
            if (!values.count(k))
                throw UsageError("unknown parameter '" + k + "'");
            v[k] = kv.substr(eq + 1);
        }
        std::vector<std::string> need{"q"};
        for (const auto& n : required_params(id()))
            need.push_back(n);
        for (const auto& n : need)
            if (!v.count(n))
                throw UsageError("missing: " + n);
        FamilyParams p;
        cplx q = parse_complex(v["q"]);
        if (q.imag() != 0.0 || !(q.real() > 0.0 && q.real() < 1.0))
            throw UsageError("q must be real with 0 < q < 1");
        p.q = q.real();
        for (auto& [k, s] : v) {
            if (k == "q")
                continue;
            cplx c = parse_complex(s);
            (k == "A" ? p.A : k == "B" ? p.B : k == "C" ? p.C : k == "D" ? p.D : k == "delta" ? p.delta : p.a) = c;
        }
        return p;
    }
};

CDQHParams as_cdqh(const FamilyParams& p) { return {p.q, p.A, p.B, p.C, p.D}; }

// polynomials are the same from either side of the cut
// the explicit sums divide by z or u; the polynomial itself is finite there
bool removable(const Error& e)
{
    return e.kind() == ErrorKind::ZeroDivisor || e.kind() == ErrorKind::ZeroDenominator;
}

cplx family_poly(Family f, const FamilyParams& p, cplx z, long n)
{
    cplx v;
    try {
        v = limit_poly(f, p, z, n);
    } catch (const Error& e) {
        if (!removable(e))
            throw;
        v = monic_poly({f, p, z}, n);
    }
    const bool real = z.imag() == 0.0 && p.A.imag() == 0.0 && p.B.imag() == 0.0 && p.C.imag() == 0.0 &&
                      p.D.imag() == 0.0 && p.delta.imag() == 0.0 && p.a.imag() == 0.0;
    return real ? cplx(v.real(), 0.0) : v;
}

cplx cdqh_poly(const CDQHParams& c, cplx z, long n)
{
    SpectralPoint pt;
    try {
        pt = spectral_point(c, z);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BranchAmbiguous)
            throw;
        pt = spectral_point(c, z, Side::AbovePlus);
    }
    cplx v;
    try {
        v = explicit_poly(c, pt, n);
    } catch (const Error& e) {
        if (!removable(e))
            throw;
        v = monic_poly(c.at(z), n);
    }
    // real coefficients: drop the rounding noise from complex u
    const bool real = z.imag() == 0.0 && c.A.imag() == 0.0 && c.B.imag() == 0.0 && c.C.imag() == 0.0 &&
                      c.D.imag() == 0.0;
    return real ? cplx(v.real(), 0.0) : v;
}

TruncationPolicy policy()
{
    TruncationPolicy pol;
    if (const char* t = std::getenv("QDH_TOL")) {
        try {
            pol.rel_tol = std::stod(t);
        } catch (const std::exception&) {
            throw UsageError(std::string("QDH_TOL is not a number: ") + t);
        }
        pol.validate();
    }
    return pol;
}

struct Row {
    std::string key;
    cplx v;
};

void emit_rows(const std::vector<Row>& rows, const std::string& format)
{
    if (format == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rows)
            a.push_back({{"n_or_x", r.key}, {"re", r.v.real()}, {"im", r.v.imag()}});
        std::cout << a.dump(2) << "\n";
        return;
    }
    if (format == "csv")
        std::cout << "n_or_x,re,im\n";
    const char sep = format == "csv" ? ',' : ' ';
    for (const auto& r : rows)
        std::cout << r.key << sep << fmt(r.v.real()) << sep << fmt(r.v.imag()) << "\n";
}

struct EvalArgs {
    FamilyArgs fam;
    std::string what = "poly";
    long n = 0;
    std::string z;
    std::string grid;
    std::string solution;
    std::string format = "csv";
};

cplx eval_one(const EvalArgs& e, Family f, const FamilyParams& p, cplx z, long n, const TruncationPolicy& pol)
{
    if (f == Family::CDQH) {
        CDQHParams c = as_cdqh(p);
        c.validate();
        if (e.what == "weight")
            return weight(c, z.real(), WeightForm::Closed, pol);
        if (e.what == "poly")
            return cdqh_poly(c, z, n);
        SpectralPoint pt = spectral_point(c, z);
        if (e.what == "cf")
            return cf_stieltjes(c, pt, CfForm::Ratio, pol);
        for (Solution s : {Solution::X1Minus, Solution::X1Plus, Solution::X2, Solution::X3, Solution::X4,
                           Solution::X5, Solution::X6})
            if (e.solution == to_string(s))
                return solution(c, pt, s, n, pol);
        throw UsageError("unknown solution '" + e.solution + "'");
    }
    if (e.what == "weight")
        return limit_weight(f, p, z.real(), LimitWeightForm::Closed, pol);
    if (e.what == "poly")
        return family_poly(f, p, z, n);
    if (e.what == "cf")
        return limit_cf(f, p, z, LimitCfForm::Standard, pol);
    for (const auto& info : limit_solution_catalog(f))
        if (info.label == e.solution)
            return limit_solution(f, p, z, e.solution, n, pol);
    throw UsageError("unknown solution '" + e.solution + "' for " + e.fam.family);
}

int cmd_eval(const EvalArgs& e)
{
    const Family f = e.fam.id();
    const FamilyParams p = e.fam.build();
    const TruncationPolicy pol = policy();
    if (e.what == "solution" && e.solution.empty())
        throw UsageError("--what solution needs --solution");
    std::vector<Row> rows;
    if (!e.grid.empty()) {
        Grid g = parse_grid(e.grid);
        for (int i = 0; i < g.count; ++i)
            rows.push_back({fmt(g.at(i)), eval_one(e, f, p, g.at(i), e.n, pol)});
    } else {
        if (e.z.empty())
            throw UsageError(e.what == "weight" ? "missing: x (give --z or --grid)" : "missing: z");
        cplx z = parse_complex(e.z);
        rows.push_back({e.what == "weight" ? fmt(z.real()) : std::to_string(e.n), eval_one(e, f, p, z, e.n, pol)});
    }
    emit_rows(rows, e.format);
    return kOk;
}

struct VerifyArgs {
    std::string check = "all";
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
};

int cmd_verify(const VerifyArgs& v)
{
    if (!is_check_name(v.check))
        throw UsageError("unknown check '" + v.check + "'");
    auto reports = run_check(v.check, v.seed);
    if (v.format == "json") {
        std::cout << to_json(reports) << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << to_text(r);
    }
    for (const auto& r : reports)
        if (!r.passed)
            return kCheckFail;
    return kOk;
}

struct ZerosArgs {
    std::string f = "fourth-limit";
    long n = 0;
    double q = 0.5;
    int count = 8;
    bool interlace = false;
    std::string side = "negative";
};

int cmd_zeros(const ZerosArgs& z)
{
    if (z.f != "fourth-limit")
        throw UsageError("zeros supports --f fourth-limit only");
    check_base(z.q);
    if (z.interlace) {
        ZeroList a = fourth_limit_zeros(z.q, z.n, z.count), b = fourth_limit_zeros(z.q, z.n + 1, z.count);
        bool ok = interlaces(a.zeros, b.zeros);
        std::cout << (ok ? "PASS" : "FAIL") << " interlace q=" << fmt(z.q) << " n=" << z.n << " n+1=" << z.n + 1
                  << " zeros=" << a.zeros.size() << "," << b.zeros.size() << "\n";
        return ok ? kOk : kCheckFail;
    }
    ZeroList zl;
    if (z.side == "negative") {
        zl = fourth_limit_zeros(z.q, z.n, z.count);
    } else if (z.side == "positive") {
        ScanOptions opt;
        opt.max_zeros = z.count;
        zl = find_zeros([&](double x) { return fourth_limit_f(z.q, z.n, x); }, 1e-8, 1e6, opt);
    } else {
        throw UsageError("--side must be negative or positive");
    }
    std::cout << "index,zero,lo,hi\n";
    for (std::size_t i = 0; i < zl.zeros.size(); ++i)
        std::cout << i << "," << fmt(zl.zeros[i]) << "," << fmt(zl.bracketing_intervals[i].first) << ","
                  << fmt(zl.bracketing_intervals[i].second) << "\n";
    return kOk;
}

struct TableArgs {
    FamilyArgs fam;
    long n_min = 0, n_max = 5;
    std::string grid = "-1:1:21";
};

int cmd_table(const TableArgs& t)
{
    const Family f = t.fam.id();
    const FamilyParams p = t.fam.build();
    Grid g = parse_grid(t.grid);
    std::cout << "# family=" << to_string(f) << " q=" << fmt(p.q);
    for (const auto& n : required_params(f)) {
        cplx v = n == "A" ? p.A : n == "B" ? p.B : n == "C" ? p.C : n == "D" ? p.D : n == "delta" ? p.delta : p.a;
        std::cout << " " << n << "=" << fmt(v);
    }
    std::cout << "\nz";
    for (long n = t.n_min; n <= t.n_max; ++n)
        std::cout << ",P" << n;
    std::cout << "\n";
    if (t.n_max < t.n_min)
        return kOk;
    for (int i = 0; i < g.count; ++i) {
        const double z = g.at(i);
        std::string line = fmt(z);
        for (long n = t.n_min; n <= t.n_max; ++n) {
            cplx v = f == Family::CDQH ? cdqh_poly(as_cdqh(p), z, n) : family_poly(f, p, z, n);
            line += "," + fmt(v);
        }
        std::cout << line << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qdh: associated continuous dual q-Hahn polynomials and their limits"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial, solution, 1/CF or weight");
    ev.fam.attach(eval);
    eval->add_option("--what", ev.what, "poly, solution, cf or weight")
        ->check(CLI::IsMember({"poly", "solution", "cf", "weight"}));
    eval->add_option("--n", ev.n, "index n");
    eval->add_option("--z", ev.z, "point (x for weight)");
    eval->add_option("--grid", ev.grid, "real grid a:b:N");
    eval->add_option("--solution", ev.solution, "solution label (X1-, X2, ... or a limit-family label)");
    eval->add_option("--format", ev.format)->check(CLI::IsMember({"csv", "json", "text"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run identity and property checks");
    verify->add_option("--check", va.check, "check group or all");
    verify->add_option("--seed", va.seed);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

    ZerosArgs za;
    auto* zeros = app.add_subcommand("zeros", "zeros of the fourth-limit functions f_n");
    zeros->add_option("--f", za.f, "function (fourth-limit)");
    zeros->add_option("--n", za.n);
    zeros->add_option("--q", za.q);
    zeros->add_option("--count", za.count);
    zeros->add_option("--side", za.side, "negative or positive half-line");
    zeros->add_flag("--interlace", za.interlace, "check interlacing of f_n and f_{n+1}");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "P_n(z) for a range of n on a real grid");
    ta.fam.attach(table);
    table->add_option("--n-min", ta.n_min);
    table->add_option("--n-max", ta.n_max);
    table->add_option("--grid", ta.grid, "real grid a:b:N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval)
            return cmd_eval(ev);
        if (*verify)
            return cmd_verify(va);
        if (*zeros)
            return cmd_zeros(za);
        return cmd_table(ta);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::UnsupportedFamily ? kUsage : kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
}
