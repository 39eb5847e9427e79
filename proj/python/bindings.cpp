// Low-level extension module. Structured results cross the boundary as the
// same JSON documents the CLI emits; reals are decimal strings, rationals "num/den".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetaforms/arith.hpp"
#include "zetaforms/contour.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/forms.hpp"
#include "zetaforms/report.hpp"
#include "zetaforms/rfunc.hpp"
#include "zetaforms/saddle.hpp"

namespace py = pybind11;
using namespace zetaforms;

namespace {

PrecisionContext context(int prec)
{
    const PrecisionContext ctx{prec, PrecisionContext::default_guard};
    ctx.validate();
    return ctx;
}

Which which_of(const std::string& s)
{
    if (s == "plain") {
        return Which::plain;
    }
    if (s == "hat") {
        return Which::hat;
    }
    throw PreconditionError("which must be 'plain' or 'hat'");
}

std::string real_out(const Real& x, int prec) { return real_string(x, prec); }

std::pair<std::string, std::string> complex_out(const Complex& z, int prec)
{
    return {real_string(z.re(), prec), real_string(z.im(), prec)};
}

LinearForm form_of(long n, long A)
{
    const Parameters p{n, A};
    p.validate_even();
    return q_coefficients(partial_fractions(p));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    // Release the GIL around long computations; none of these touch Python objects.
    using release = py::call_guard<py::gil_scoped_release>;

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def(
        "partial_fractions",
        [](long n, long A) { return to_json(partial_fractions(Parameters{n, A})).dump(); }, py::arg("n"), py::arg("A"), release());

    m.def(
        "q_coefficients", [](long n, long A) { return to_json(form_of(n, A)).dump(); }, py::arg("n"), py::arg("A"), release());

    m.def(
        "eliminate", [](long n, long A, long mm) { return to_json(eliminate(form_of(n, A), mm)).dump(); }, py::arg("n"), py::arg("A"),
        py::arg("m"), release());

    m.def(
        "S_direct",
        [](long n, long A, const std::string& which, int prec) {
            return real_out(S_direct(Parameters{n, A}, context(prec), which_of(which)), prec);
        },
        py::arg("n"), py::arg("A"), py::arg("which"), py::arg("prec"), release());

    m.def(
        "S_via_zeta",
        [](long n, long A, const std::string& which, int prec) {
            return real_out(S_via_zeta(form_of(n, A), context(prec), which_of(which)), prec);
        },
        py::arg("n"), py::arg("A"), py::arg("which"), py::arg("prec"), release());

    m.def(
        "delta", [](int prec) { return real_out(delta_integral(context(prec)), prec); }, py::arg("prec"), release());

    m.def(
        "kappa", [](long A, int prec) { return real_out(kappa(A, context(prec)), prec); }, py::arg("A"), py::arg("prec"), release());

    m.def(
        "final_exponent", [](int prec) { return real_out(final_exponent(context(prec)), prec); }, py::arg("prec"), release());

    m.def(
        "asymptotics",
        [](long A, int prec) {
            const PrecisionContext ctx = context(prec);
            return asymptotic_report(build_model(A, ctx), ctx).dump();
        },
        py::arg("A"), py::arg("prec"), release());

    m.def(
        "predict_S",
        [](long A, long n, const std::string& which, int prec) {
            return complex_out(predict_S(A, n, context(prec), which_of(which)), prec);
        },
        py::arg("A"), py::arg("n"), py::arg("which"), py::arg("prec"), release());

    m.def(
        "contour_S",
        [](long n, long A, const std::string& which, const std::string& c, double rel_tol, int prec) {
            ContourSpec spec;
            spec.c = Rational::parse(c);
            spec.rel_tol = rel_tol;
            const ContourResult r = contour_S(Parameters{n, A}, spec, context(prec), which_of(which));
            Json j{{"value", complex_json(r.value, prec)},
                   {"tail_bound", r.tail_bound.to_string(6)},
                   {"quad_error", r.quad_error.to_string(6)},
                   {"Y", std::to_string(r.Y)},
                   {"step", std::to_string(r.step)},
                   {"points", std::to_string(r.points)}};
            return j.dump();
        },
        py::arg("n"), py::arg("A"), py::arg("which"), py::arg("c"), py::arg("rel_tol"), py::arg("prec"), release());

    m.def(
        "phi", [](long n) { return to_json(denominators(n)).dump(); }, py::arg("n"), release());

    m.def(
        "rho0", [](const std::string& x) { return rho0(Rational::parse(x)); }, py::arg("x"), release());
}
