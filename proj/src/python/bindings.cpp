#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kvl/analysis.hpp"
#include "kvl/construction.hpp"
#include "kvl/interpolation.hpp"
#include "kvl/io.hpp"

namespace py = pybind11;
using namespace kvl;

namespace {

TruthTable make_table(int k, int n, const std::vector<int>& values) {
    std::vector<Value> vals;
    vals.reserve(values.size());
    for (int v : values) {
        if (v < 0 || v > 255)
            throw DomainError("table value out of range");
        vals.push_back(static_cast<Value>(v));
    }
    return TruthTable(k, n, std::move(vals));
}

std::vector<int> as_ints(const std::vector<Value>& vals) {
    return {vals.begin(), vals.end()};
}

Fixing make_fixing(const std::map<int, int>& bindings) {
    Fixing fix;
    for (auto [pos, val] : bindings) {
        if (val < 0 || val > 255)
            throw DomainError("fixing constant out of range");
        fix.bindings[pos] = static_cast<Value>(val);
    }
    return fix;
}

py::object check_to_python(const CheckResult& r) {
    if (r.ok)
        return py::make_tuple(true, py::none());
    return py::make_tuple(false, r.witness->to_string());
}

} // namespace

PYBIND11_MODULE(_kvlogic, m) {
    m.doc() = "Functions of k-valued logic as hypercubes: spectra, "
              "modular-sum construction, Latin-hypercube checks and "
              "polynomial forms.";

    py::register_exception<Error>(m, "KvlError");

    py::class_<TruthTable>(m, "TruthTable")
        .def(py::init(&make_table), py::arg("k"), py::arg("n"), py::arg("values"))
        .def_property_readonly("k", &TruthTable::order)
        .def_property_readonly("n", &TruthTable::arity)
        .def_property_readonly("values",
                               [](const TruthTable& t) { return as_ints(t.values()); })
        .def("__call__",
             [](const TruthTable& t, const std::vector<int>& a) {
                 Assignment coords;
                 for (int c : a) {
                     if (c < 0 || c > 255)
                         throw DomainError("coordinate out of range");
                     coords.push_back(static_cast<Value>(c));
                 }
                 return int{t.evaluate(coords)};
             })
        .def("__eq__", [](const TruthTable& a, const TruthTable& b) { return a == b; })
        .def("__repr__", [](const TruthTable& t) {
            return "TruthTable(k=" + std::to_string(t.order()) +
                   ", n=" + std::to_string(t.arity()) + ")";
        });

    m.def("constant", &TruthTable::constant, py::arg("k"), py::arg("n"), py::arg("value"));
    m.def("range_of", &range, py::arg("f"));
    m.def("subfunction",
          [](const TruthTable& f, const std::map<int, int>& fix) {
              return subfunction(f, make_fixing(fix));
          },
          py::arg("f"), py::arg("fix"));
    m.def("spectrum",
          [](const std::set<int>& vars, const TruthTable& f) { return spectrum(vars, f); },
          py::arg("vars"), py::arg("f"));
    m.def("is_h_function",
          [](const TruthTable& f) { return check_to_python(is_h_function(f)); }, py::arg("f"));
    m.def("is_latin_hypercube",
          [](const TruthTable& f) { return check_to_python(is_latin_hypercube(f)); },
          py::arg("f"));
    m.def("check_hsq",
          [](const TruthTable& f, const std::vector<std::set<int>>& blocks,
             const std::vector<int>& qvec) {
              std::vector<VariableSet> bs(blocks.begin(), blocks.end());
              return check_to_python(check_hsq(f, Partition::of(bs, f.arity()), qvec));
          },
          py::arg("f"), py::arg("blocks"), py::arg("qvec"));
    m.def("check_qh",
          [](const TruthTable& f, const std::vector<int>& qvec) {
              return check_to_python(check_qh(f, qvec));
          },
          py::arg("f"), py::arg("qvec"));
    m.def("check_hq",
          [](const TruthTable& f, int q) { return check_to_python(check_hq(f, q)); },
          py::arg("f"), py::arg("q"));
    m.def("hereditary_check", &hereditary_check, py::arg("f"), py::arg("q"));

    m.def("affine_transform",
          [](const TruthTable& g, int a, int b) {
              return affine_transform(g, {a, b, g.order()});
          },
          py::arg("g"), py::arg("a"), py::arg("b"));
    m.def("compose_sum",
          [](int k, int n,
             const std::vector<std::tuple<int, std::set<int>, TruthTable>>& summands) {
              std::vector<BlockSummand> ss;
              for (const auto& [a, block, fn] : summands)
                  ss.push_back({a, VariableSet(block.begin(), block.end()), fn});
              return compose_sum(k, n, ss);
          },
          py::arg("k"), py::arg("n"), py::arg("summands"));
    m.def("construct_linear_h", &construct_linear_h, py::arg("k"), py::arg("coeffs"));
    m.def("sample_with_range", &sample_with_range, py::arg("k"), py::arg("n"), py::arg("q"),
          py::arg("seed"));
    m.def("identification_condition", &identification_condition, py::arg("coeffs"),
          py::arg("k"));
    m.def("identify_variables",
          [](const TruthTable& f, const std::set<int>& vars) {
              return identify_variables(f, VariableSet(vars.begin(), vars.end()));
          },
          py::arg("f"), py::arg("vars"));

    m.def("interpolate_unary",
          [](const TruthTable& t) {
              UnaryPolynomial poly = interpolate_unary(t);
              return py::make_tuple(poly.modulus, as_ints(poly.coefficients),
                                    poly.to_string());
          },
          py::arg("table"));
    m.def("eval_polynomial",
          [](int modulus, const std::vector<int>& coefficients, int x) {
              std::vector<Value> cs;
              for (int c : coefficients)
                  cs.push_back(static_cast<Value>(c));
              return int{eval_polynomial({modulus, cs}, static_cast<Value>(x))};
          },
          py::arg("modulus"), py::arg("coefficients"), py::arg("x"));

    m.def("serialize", &serialize, py::arg("f"));
    m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
    m.def("load_file", &load_file, py::arg("path"));
    m.def("save_file", &save_file, py::arg("f"), py::arg("path"));
}
