#include "wh3/algebra_file.hpp"
#include "wh3/cli.hpp"
#include "wh3/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace wh3;

namespace {

Presentation select_algebra(const std::string& name, const verify::Context& ctx) {
    if (name == "x") return ctx.family_presentation(catalog::FamilyId::xx);
    if (name == "xi") return ctx.family_presentation(catalog::FamilyId::xixi);
    if (name == "d") return ctx.family_presentation(catalog::FamilyId::dd);
    if (name == "t") return ctx.rtt();
    if (name == "qg") return ctx.quantum_group();
    if (name == "calc-omega") return ctx.calculus(catalog::Variant::omega);
    if (name == "calc-omega-inv") return ctx.calculus(catalog::Variant::omega_inv);
    return ctx.family_presentation(catalog::parse_family(name));
}

verify::VerifyOptions options(const std::string& errata, const std::optional<std::string>& mode,
                              const std::string& set, const std::vector<std::string>& mutations) {
    verify::VerifyOptions o;
    o.errata = errata == "off" ? catalog::Errata::off : catalog::Errata::on;
    if (mode) o.mode = *mode == "modular" ? Mode::modular : Mode::exact;
    o.set = parse_bindings(set);
    for (const auto& m : mutations) o.mutations.push_back(verify::parse_mutation(m));
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the wh3 verification engine";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PresentationError>(m, "PresentationError", PyExc_RuntimeError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const std::string& text) { return parse_scalar(text); }))
        .def(py::init([](long v) { return Scalar(v); }))
        .def("__str__", &Scalar::to_string)
        .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.to_string() + "')"; })
        .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
        .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
        .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
        .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
        .def("__neg__", [](const Scalar& a) { return -a; })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("__hash__", &Scalar::hash)
        .def("inverse", &Scalar::inverse)
        .def("is_zero", &Scalar::is_zero)
        .def("substitute", [](const Scalar& a, const std::string& bindings) {
            return substitute(a, parse_bindings(bindings));
        });

    m.def("check_ids", &verify::check_ids);

    m.def(
        "verify_json",
        [](const std::string& check, const std::string& errata, const std::optional<std::string>& mode,
           const std::string& set, const std::vector<std::string>& mutations) {
            const verify::Context ctx(options(errata, mode, set, mutations));
            py::gil_scoped_release release;
            return verify::to_json(verify::run_check(check, ctx), false).dump();
        },
        py::arg("check"), py::arg("errata") = "on", py::arg("mode") = py::none(), py::arg("set") = "",
        py::arg("mutations") = std::vector<std::string>{});

    m.def(
        "normalize",
        [](const std::string& algebra, const std::string& expr, const std::string& errata) {
            const verify::Context ctx(options(errata, std::nullopt, "", {}));
            const Presentation p = select_algebra(algebra, ctx);
            return orient(p, OrientPolicy::lenient).normalize(parse_element(expr, p.alphabet)).to_string(p.alphabet);
        },
        py::arg("algebra"), py::arg("expr"), py::arg("errata") = "on");

    m.def(
        "is_member",
        [](const std::string& algebra, const std::string& expr, std::size_t degree, const std::string& mode) {
            const verify::Context ctx;
            const Presentation p = select_algebra(algebra, ctx);
            const Element e = parse_element(expr, p.alphabet);
            const std::size_t d = degree ? degree : std::max<std::size_t>(e.degree(), 2);
            return ideal_membership(e, p, d, mode == "modular" ? Mode::modular : Mode::exact).member;
        },
        py::arg("algebra"), py::arg("expr"), py::arg("degree") = 0, py::arg("mode") = "exact");

    m.def("omega", [](bool inverse) {
        const catalog::CMatrix c = inverse ? catalog::omega_inverse() : catalog::omega();
        std::vector<std::vector<std::string>> rows(9, std::vector<std::string>(9));
        for (std::size_t r = 0; r < 9; ++r)
            for (std::size_t k = 0; k < 9; ++k) rows[r][k] = c(r, k).to_string();
        return rows;
    }, py::arg("inverse") = false);

    m.def(
        "export_json",
        [](const std::string& algebra, const std::string& errata) {
            const verify::Context ctx(options(errata, std::nullopt, "", {}));
            return presentation_to_json(select_algebra(algebra, ctx)).dump();
        },
        py::arg("algebra"), py::arg("errata") = "on");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });
}
