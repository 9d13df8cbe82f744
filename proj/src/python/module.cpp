#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclica/fedosov.hpp"
#include "cyclica/forms.hpp"
#include "cyclica/hp.hpp"
#include "cyclica/json_io.hpp"

namespace py = pybind11;
using namespace cyclica;

namespace {

/// Entries may be Python ints or "p/q" strings.
SparseVec vector_from_py(const py::list& v, std::size_t dim) {
    if (v.size() != dim) throw std::invalid_argument("vector of length " + std::to_string(dim) + " expected");
    std::vector<Entry> raw;
    for (std::size_t k = 0; k < dim; ++k) {
        py::handle x = v[k];
        Rational r = py::isinstance<py::int_>(x) ? Rational(x.cast<long long>()) : Rational::parse(py::str(x).cast<std::string>());
        raw.push_back({std::uint32_t(k), r});
    }
    return normalize(std::move(raw));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hochschild, cyclic and bivariant periodic cyclic computations over Q";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_ArithmeticError);
    py::register_exception<DimensionCapError>(m, "DimensionCapError", PyExc_MemoryError);
    py::register_exception<NonNilpotentError>(m, "NonNilpotentError", PyExc_ValueError);

    py::class_<Algebra>(m, "Algebra")
        .def_static("from_json", [](const std::string& s) { return algebra_from_json(Json::parse(s)).algebra; })
        .def_static("ground_field", &Algebra::ground_field)
        .def_static("zero_multiplication", &Algebra::zero_multiplication)
        .def_static("truncated_polynomial", &Algebra::truncated_polynomial)
        .def_static("upper_triangular_2", &Algebra::upper_triangular_2)
        .def_static("product", [](const Algebra& a, const Algebra& b) { return Algebra::product(a, b); })
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("name", &Algebra::name)
        .def("to_json", [](const Algebra& a) { return dump(algebra_to_json(a)); })
        .def("__repr__", [](const Algebra& a) { return "<Algebra " + a.name() + " dim " + std::to_string(a.dim()) + ">"; });

    py::class_<IdealInclusion>(m, "Ideal")
        .def(py::init([](const Algebra& a, const std::vector<py::list>& vectors) {
                 std::vector<SparseVec> vs;
                 for (const auto& v : vectors) vs.push_back(vector_from_py(v, a.dim()));
                 return IdealInclusion::span(a, vs);
             }),
             py::arg("algebra"), py::arg("vectors"))
        .def_static("zero", &IdealInclusion::zero)
        .def_static("whole", &IdealInclusion::whole)
        .def_property_readonly("dim", &IdealInclusion::dim)
        .def_property_readonly("ambient", &IdealInclusion::ambient)
        .def("as_algebra", [](const IdealInclusion& k) { return k.as_algebra(); });

    m.def(
        "hochschild_dims",
        [](const Algebra& a, std::size_t max_degree) {
            ChainComplex c = cyclic_sub(omega(a, max_degree));
            std::vector<std::size_t> out;
            for (int n = 0; n <= c.top_defined_degree(); ++n) out.push_back(c.homology_dim(n));
            return out;
        },
        py::arg("algebra"), py::arg("max_degree") = 6);

    // Reports cross the boundary as the same JSON text the CLI prints.
    m.def(
        "_hp", [](const Algebra& a, const Algebra& b, std::size_t N, std::size_t w) { return dump(to_json(hp_grid(a, b, N, w))); },
        py::arg("source"), py::arg("target"), py::arg("max_degree"), py::arg("window"));
    m.def(
        "_excision",
        [](const IdealInclusion& i, const Algebra& b, std::size_t N, std::size_t w) { return dump(to_json(verify_excision(i, b, N, w))); },
        py::arg("ideal"), py::arg("target"), py::arg("max_degree"), py::arg("window"));
    m.def(
        "_goodwillie", [](const IdealInclusion& f, std::size_t N, std::size_t w) { return dump(to_json(verify_goodwillie(f, N, w))); },
        py::arg("ideal"), py::arg("max_degree"), py::arg("window"));
    m.def(
        "_h_unital",
        [](const Algebra& k, const std::vector<IdealInclusion>& emb, std::size_t N) { return dump(to_json(check_h_unital(k, emb, N))); },
        py::arg("k"), py::arg("embeddings"), py::arg("max_degree"));
    m.def(
        "_fedosov",
        [](const Algebra& a, std::size_t n, std::size_t cap) { return dump(to_json(check_cochain_identities(fundamental_cochain(a, n, cap)))); },
        py::arg("algebra"), py::arg("n"), py::arg("cap"));
}
