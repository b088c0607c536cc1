#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdh/cdqhahn.hpp"
#include "qdh/limits.hpp"
#include "qdh/qseries.hpp"
#include "qdh/quadrature.hpp"
#include "qdh/recurrence.hpp"
#include "qdh/verify.hpp"

namespace py = pybind11;
using namespace qdh;

namespace {

PyObject* g_error = nullptr;

std::vector<cplx> unscaled_values(const SolutionSequence& s)
{
    std::vector<cplx> out;
    for (long n = s.start_index; n < s.end_index(); ++n)
        out.push_back(s.at(n) * std::exp(s.log_scale_at(n)));
    return out;
}

FamilyParams make_params(double q, cplx A, cplx B, cplx C, cplx D, cplx delta, cplx a)
{
    return FamilyParams{q, A, B, C, D, delta, a};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Associated continuous dual q-Hahn polynomials and their limit families.";

    py::exception<Error> err(m, "Error", PyExc_RuntimeError);
    g_error = err.ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(g_error)(e.what());
            inst.attr("kind") = to_string(e.kind());
            PyErr_SetObject(g_error, inst.ptr());
        }
    });

    py::enum_<Family>(m, "Family")
        .value("CDQH", Family::CDQH)
        .value("BigQLaguerre", Family::BigQLaguerre)
        .value("Wall", Family::Wall)
        .value("LimitWall", Family::LimitWall)
        .value("FourthLimit", Family::FourthLimit)
        .value("AlSalamChihara", Family::AlSalamChihara)
        .value("AlSalamCarlitz1", Family::AlSalamCarlitz1)
        .value("LimitASC1", Family::LimitASC1)
        .value("ContQHermite", Family::ContQHermite)
        .value("LimitQHermite", Family::LimitQHermite)
        .value("ContBigQHermite", Family::ContBigQHermite)
        .value("QBesselOrder", Family::QBesselOrder);
    m.def("family_from_string", &family_from_string);
    m.def("family_name", [](Family f) { return std::string(to_string(f)); });
    m.def("required_params", &required_params);

    py::enum_<Side>(m, "Side")
        .value("OffCut", Side::OffCut)
        .value("AbovePlus", Side::AbovePlus)
        .value("BelowMinus", Side::BelowMinus);
    py::enum_<Solution>(m, "Solution")
        .value("X1Minus", Solution::X1Minus)
        .value("X1Plus", Solution::X1Plus)
        .value("X2", Solution::X2)
        .value("X3", Solution::X3)
        .value("X4", Solution::X4)
        .value("X5", Solution::X5)
        .value("X6", Solution::X6);
    py::enum_<CfForm>(m, "CfForm")
        .value("Pincherle", CfForm::Pincherle)
        .value("Ratio", CfForm::Ratio)
        .value("RatioAlt", CfForm::RatioAlt)
        .value("CeqQ", CfForm::CeqQ)
        .value("CeqQProducts", CfForm::CeqQProducts);
    py::enum_<WeightForm>(m, "WeightForm")
        .value("Closed", WeightForm::Closed)
        .value("Casoratian", WeightForm::Casoratian)
        .value("Stieltjes", WeightForm::Stieltjes)
        .value("CeqQ", WeightForm::CeqQ);
    py::enum_<LimitWeightForm>(m, "LimitWeightForm")
        .value("Closed", LimitWeightForm::Closed)
        .value("Stieltjes", LimitWeightForm::Stieltjes)
        .value("Reduced", LimitWeightForm::Reduced);

    py::class_<FamilyParams>(m, "FamilyParams")
        .def(py::init(&make_params), py::arg("q") = 0.5, py::arg("A") = cplx{}, py::arg("B") = cplx{},
             py::arg("C") = cplx{}, py::arg("D") = cplx{}, py::arg("delta") = cplx{}, py::arg("a") = cplx{})
        .def_readwrite("q", &FamilyParams::q)
        .def_readwrite("A", &FamilyParams::A)
        .def_readwrite("B", &FamilyParams::B)
        .def_readwrite("C", &FamilyParams::C)
        .def_readwrite("D", &FamilyParams::D)
        .def_readwrite("delta", &FamilyParams::delta)
        .def_readwrite("a", &FamilyParams::a);

    py::class_<CDQHParams>(m, "CDQHParams")
        .def(py::init([](double q, cplx A, cplx B, cplx C, cplx D) {
                 CDQHParams p{q, A, B, C, D};
                 p.validate();
                 return p;
             }),
             py::arg("q"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"))
        .def_readonly("q", &CDQHParams::q)
        .def_readonly("A", &CDQHParams::A)
        .def_readonly("B", &CDQHParams::B)
        .def_readonly("C", &CDQHParams::C)
        .def_readonly("D", &CDQHParams::D)
        .def("family", &CDQHParams::family);

    py::class_<SpectralPoint>(m, "SpectralPoint")
        .def_readonly("z", &SpectralPoint::z)
        .def_readonly("alpha", &SpectralPoint::alpha)
        .def_readonly("x", &SpectralPoint::x)
        .def_readonly("u", &SpectralPoint::u)
        .def_readonly("lambda_minus", &SpectralPoint::lambda_minus)
        .def_readonly("lambda_plus", &SpectralPoint::lambda_plus);

    // q-series
    m.def("qpoch", [](cplx a, double q, long n) { return qpoch(a, q, n); }, py::arg("a"), py::arg("q"),
          py::arg("n"));
    m.def("qpoch_inf", [](cplx a, double q) { return qpoch_inf(a, q); }, py::arg("a"), py::arg("q"));
    m.def(
        "phi",
        [](const std::vector<cplx>& num, const std::vector<cplx>& den, double q, cplx z, double rel_tol,
           int max_terms) { return phi_auto(num, den, q, z, TruncationPolicy{rel_tol, max_terms}); },
        py::arg("num"), py::arg("den"), py::arg("q"), py::arg("z"), py::arg("rel_tol") = 1e-12,
        py::arg("max_terms") = 5000);
    m.def("phi32", [](cplx a, cplx b, cplx c, cplx d, cplx e, double q) { return phi32(a, b, c, d, e, q); });

    // recurrence
    m.def(
        "monic_poly", [](Family f, const FamilyParams& p, cplx z, long n) { return monic_poly({f, p, z}, n); },
        py::arg("family"), py::arg("params"), py::arg("z"), py::arg("n"));
    m.def(
        "forward_eval",
        [](Family f, const FamilyParams& p, cplx z, cplx x_prev, cplx x0, long n_max) {
            return unscaled_values(forward_eval({f, p, z}, x_prev, x0, n_max));
        },
        py::arg("family"), py::arg("params"), py::arg("z"), py::arg("x_prev"), py::arg("x0"), py::arg("n_max"));
    m.def(
        "cf_truncated", [](Family f, const FamilyParams& p, cplx z, long depth) { return cf_truncated({f, p, z}, depth); },
        py::arg("family"), py::arg("params"), py::arg("z"), py::arg("depth"));
    m.def(
        "recurrence_coeffs",
        [](Family f, const FamilyParams& p, long n) {
            Coeffs c = coeffs(f, p, n);
            return py::make_tuple(c.a, c.b2);
        },
        py::arg("family"), py::arg("params"), py::arg("n"));

    // cdqh
    m.def("spectral_point", &spectral_point, py::arg("params"), py::arg("z"), py::arg("side") = Side::OffCut);
    m.def(
        "solution",
        [](const CDQHParams& p, cplx z, Solution which, long n, Side side) {
            return solution(p, spectral_point(p, z, side), which, n);
        },
        py::arg("params"), py::arg("z"), py::arg("which"), py::arg("n"), py::arg("side") = Side::OffCut);
    m.def(
        "minimal_solution",
        [](const CDQHParams& p, cplx z, long n) { return minimal_solution(p, spectral_point(p, z), n); },
        py::arg("params"), py::arg("z"), py::arg("n"));
    m.def(
        "cf",
        [](const CDQHParams& p, cplx z, CfForm form) { return cf_stieltjes(p, spectral_point(p, z), form); },
        py::arg("params"), py::arg("z"), py::arg("form") = CfForm::Ratio);
    m.def(
        "weight", [](const CDQHParams& p, double x, WeightForm form) { return weight(p, x, form); },
        py::arg("params"), py::arg("x"), py::arg("form") = WeightForm::Closed);
    m.def(
        "explicit_poly",
        [](const CDQHParams& p, cplx z, long n) { return explicit_poly(p, spectral_point(p, z), n); },
        py::arg("params"), py::arg("z"), py::arg("n"));

    // limit families
    m.def(
        "limit_poly", [](Family f, const FamilyParams& p, cplx z, long n) { return limit_poly(f, p, z, n); },
        py::arg("family"), py::arg("params"), py::arg("z"), py::arg("n"));
    m.def(
        "limit_cf", [](Family f, const FamilyParams& p, cplx z) { return limit_cf(f, p, z); }, py::arg("family"),
        py::arg("params"), py::arg("z"));
    m.def(
        "limit_solution",
        [](Family f, const FamilyParams& p, cplx z, const std::string& which, long n) {
            return limit_solution(f, p, z, which, n);
        },
        py::arg("family"), py::arg("params"), py::arg("z"), py::arg("which"), py::arg("n"));
    m.def("limit_solution_labels", [](Family f) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& i : limit_solution_catalog(f))
            out.emplace_back(i.label, i.formal);
        return out;
    });
    m.def(
        "limit_weight",
        [](Family f, const FamilyParams& p, double x, LimitWeightForm form) { return limit_weight(f, p, x, form); },
        py::arg("family"), py::arg("params"), py::arg("x"), py::arg("form") = LimitWeightForm::Closed);
    m.def(
        "fourth_limit_zeros",
        [](double q, long n, int count) {
            ZeroList z = fourth_limit_zeros(q, n, count);
            return py::make_tuple(z.zeros, z.bracketing_intervals);
        },
        py::arg("q"), py::arg("n"), py::arg("count") = 8);
    m.def("interlaces", &interlaces);
    m.def("limit_edges", [] {
        std::vector<py::tuple> out;
        for (const auto& e : limit_edges())
            out.push_back(py::make_tuple(e.name, to_string(e.parent), to_string(e.child), e.to_zero));
        return out;
    });
    m.def(
        "limit_convergence",
        [](const std::string& name, const FamilyParams& child, const std::vector<double>& scales, long n, cplx z) {
            for (const auto& e : limit_edges())
                if (name == e.name)
                    return limit_convergence(e.id, child, scales, n, z);
            throw Error(ErrorKind::InvalidArgument, "unknown limit edge '" + name + "'");
        },
        py::arg("edge"), py::arg("child"), py::arg("scales"), py::arg("n"), py::arg("z"));

    // verify
    m.def("check_names", &check_names);
    m.def(
        "run_check_json",
        [](const std::string& name, std::uint64_t seed) {
            std::vector<CheckReport> rs;
            {
                py::gil_scoped_release nogil;
                rs = run_check(name, seed);
            }
            return to_json(rs);
        },
        py::arg("name"), py::arg("seed") = kDefaultSeed);
}
