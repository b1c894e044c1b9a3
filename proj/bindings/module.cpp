#include <pybind11/pybind11.h>

#include <algpencil/errors.hpp>
#include <algpencil/report.hpp>

namespace py = pybind11;
using namespace algpencil;

namespace {

Algebra algebra_from_doc(const std::string& doc) {
    try {
        return algebra_from_json(Json::parse(doc));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

std::optional<Rational> optional_mu(const std::string& mu) {
    if (mu.empty()) return std::nullopt;
    return parse_rational(mu);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact analysis of associative algebras through the characteristic pencil";

    static py::exception<Error> exc(m, "AlgebraError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(((std::string(e.code_name()) + ": ") + e.what()).c_str());
        }
    });

    m.def("registry", [](const std::string& name) { return algebra_to_json(registry(name)).dump(); },
          py::arg("name"), "named example algebra as a JSON document string");

    m.def("check", [](const std::string& doc) {
        return check_report(algebra_from_doc(doc)).machine.dump();
    }, py::arg("algebra_json"), "associativity and unity report");

    m.def("analyze", [](const std::string& doc, const std::string& functional,
                        std::uint64_t seed, const std::string& mu) {
        Algebra a = algebra_from_doc(doc);
        Functional f = choose_functional(a, functional, seed);
        return analyze_report(a, f, seed, optional_mu(mu)).machine.dump();
    }, py::arg("algebra_json"), py::arg("functional") = "", py::arg("seed") = 0,
       py::arg("mu") = "", "pencil, stabilizers, and spectral decomposition report");

    m.def("canon", [](const std::string& doc, std::uint64_t seed) {
        return canon_report(algebra_from_doc(doc), seed).machine.dump();
    }, py::arg("algebra_json"), py::arg("seed") = 0, "canonical form for dimensions 2 and 3");

    m.def("split", [](const std::string& doc, const std::string& functional,
                      std::uint64_t seed) {
        Algebra a = algebra_from_doc(doc);
        Functional f = choose_functional(a, functional, seed);
        return split_report(a, f).machine.dump();
    }, py::arg("algebra_json"), py::arg("functional") = "", py::arg("seed") = 0,
       "H + K.1 + H' split with the identity report");

    m.def("build", [](const std::string& h_doc, const std::string& hprime_doc,
                      const std::string& pairing_json) {
        Matrix pairing = matrix_from_json(Json::parse(pairing_json));
        return build_report(algebra_from_doc(h_doc), algebra_from_doc(hprime_doc), pairing)
            .machine.dump();
    }, py::arg("h_json"), py::arg("hprime_json"), py::arg("pairing_json"),
       "assemble a unital index-1 algebra from a dual pair");

    m.def("lie_index", [](const std::string& doc, std::uint64_t seed) {
        return lie_index(algebra_from_doc(doc), seed);
    }, py::arg("algebra_json"), py::arg("seed") = 0,
       "minimum skew-kernel dimension over seeded functionals");

    m.def("charpoly", [](const std::string& doc, const std::string& functional,
                         std::uint64_t seed) {
        Algebra a = algebra_from_doc(doc);
        Functional f = choose_functional(a, functional, seed);
        CharPencil cp = charpoly(a, f);
        Json out;
        out["chi"] = cp.chi.str();
        if (cp.factored) out["factored"] = cp.factored->str();
        return out.dump();
    }, py::arg("algebra_json"), py::arg("functional") = "", py::arg("seed") = 0,
       "characteristic form chi(lambda, mu, F), exact");

    m.attr("__version__") = "0.1.0";
}
