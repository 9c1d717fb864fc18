#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncf/bijections.hpp"
#include "ncf/enumeration.hpp"
#include "ncf/errors.hpp"
#include "ncf/forest.hpp"
#include "ncf/json_io.hpp"
#include "ncf/qcalc.hpp"
#include "ncf/sieving.hpp"

namespace py = pybind11;
using namespace ncf;

namespace {

py::int_ to_py(const BigInt& x) {
    const std::string s = x.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::list coeff_list(const QPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py(c));
    return out;
}

QPoly poly_from(const py::iterable& coeffs) {
    std::vector<BigInt> cs;
    for (auto c : coeffs) cs.push_back(from_py(c));
    return QPoly(std::move(cs));
}

py::dict residue_dict(const CyclotomicResidue& r) {
    py::dict out;
    out["d"] = r.d();
    out["residue"] = coeff_list(r.residue());
    out["value"] = r.is_integer() ? py::object(to_py(r.as_integer())) : py::object(py::none());
    return out;
}

std::vector<std::pair<int, int>> edge_pairs(const NonCrossingForest& f) {
    std::vector<std::pair<int, int>> out;
    out.reserve(f.edges().size());
    for (const auto& e : f.edges()) out.emplace_back(e.u, e.v);
    return out;
}

Mark make_mark(Vertex v, std::optional<std::pair<int, int>> edge) {
    if (!edge) return Mark::at(v);
    return Mark::on_edge(v, Chord::make(edge->first, edge->second));
}

InvariantRoute parse_route(const std::string& s) {
    if (s == "filter") return InvariantRoute::Filter;
    if (s == "bijection") return InvariantRoute::Bijection;
    if (s == "orbit") return InvariantRoute::Orbit;
    throw InputError("route must be one of filter, bijection, orbit");
}

py::tuple decomposition(const Decomposition& dec) { return py::make_tuple(dec.forest, dec.mark); }

py::dict report_dict(const CspReport& r) {
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict d;
        d["d"] = row.d;
        d["closed_form"] = to_py(row.closed_form);
        d["poly_eval"] = row.poly_eval ? py::object(to_py(*row.poly_eval)) : py::object(py::none());
        d["brute"] = row.brute;
        d["bijection"] = row.bijection ? py::object(py::int_(*row.bijection)) : py::object(py::none());
        d["agree"] = row.agree;
        if (!row.note.empty()) d["note"] = row.note;
        rows.append(d);
    }
    py::dict out;
    out["n"] = r.n;
    out["k"] = r.k;
    out["rows"] = rows;
    out["verdict"] = r.verdict;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Non-crossing forests, their q-counting polynomials and cyclic sieving checks.";

    static py::exception<InvariantViolation> invariant_exc(m, "InvariantViolation", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvariantViolation& e) {
            PyErr_SetString(invariant_exc.ptr(), e.what());
        }
    });

    py::class_<NonCrossingForest>(m, "Forest")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return NonCrossingForest::from_pairs(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &NonCrossingForest::n)
        .def_property_readonly("k", &NonCrossingForest::k)
        .def_property_readonly("edges", &edge_pairs)
        .def("has_edge", &NonCrossingForest::has_edge)
        .def("trees", &NonCrossingForest::trees)
        .def("rotate", &rotate, py::arg("s"))
        .def("is_d_invariant", &is_d_invariant, py::arg("d"))
        .def("to_dot", &to_dot, py::arg("name") = "forest")
        .def("to_json", [](const NonCrossingForest& f) { return forest_to_json(f).dump(); })
        .def_static("from_json", [](const std::string& s) { return forest_from_json(Json::parse(s)); })
        .def(py::self == py::self)
        .def("__lt__", [](const NonCrossingForest& a, const NonCrossingForest& b) { return a < b; })
        .def("__hash__", [](const NonCrossingForest& f) {
            return py::hash(py::make_tuple(f.n(), py::tuple(py::cast(edge_pairs(f)))));
        })
        .def("__repr__", [](const NonCrossingForest& f) {
            std::string s = "Forest(" + std::to_string(f.n()) + ", [";
            for (std::size_t i = 0; i < f.edges().size(); ++i) {
                if (i) s += ", ";
                s += "(" + std::to_string(f.edges()[i].u) + ", " + std::to_string(f.edges()[i].v) + ")";
            }
            return s + "])";
        });

    py::class_<Mark>(m, "Mark")
        .def(py::init(&make_mark), py::arg("vertex"), py::arg("edge") = std::nullopt)
        .def_property_readonly("vertex", [](const Mark& mk) { return mk.vertex; })
        .def_property_readonly("edge", [](const Mark& mk) -> std::optional<std::pair<int, int>> {
            if (!mk.edge) return std::nullopt;
            return std::pair{mk.edge->u, mk.edge->v};
        })
        .def(py::self == py::self)
        .def("__repr__", [](const Mark& mk) {
            std::string s = "Mark(" + std::to_string(mk.vertex);
            if (mk.edge) s += ", (" + std::to_string(mk.edge->u) + ", " + std::to_string(mk.edge->v) + ")";
            return s + ")";
        });

    py::class_<ForestStream>(m, "ForestStream")
        .def("__iter__", [](ForestStream& s) -> ForestStream& { return s; })
        .def("__next__", [](ForestStream& s) {
            auto f = s.next();
            if (!f) throw py::stop_iteration();
            return *f;
        });

    m.def(
        "enumerate_forests",
        [](int n, std::optional<int> k) { return k ? enumerate_forests(n, *k) : enumerate_all_forests(n); },
        py::arg("n"), py::arg("k") = std::nullopt, "Lazy lexicographic stream of forests on n vertices.");
    m.def("count_by_enumeration", &count_by_enumeration, py::arg("n"), py::arg("k"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "enumerate_invariant",
        [](int n, int k, int d, const std::string& route) { return enumerate_invariant(n, k, d, parse_route(route)); },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("route") = "filter");

    m.def("count_formula", [](int n, int k) { return to_py(count_formula(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("f_poly", [](int n, int k) { return coeff_list(f_poly(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("q_binomial", [](int a, int b) { return coeff_list(q_binomial(a, b)); }, py::arg("a"), py::arg("b"));
    m.def("cyclotomic", [](int d) { return coeff_list(cyclotomic(d)); }, py::arg("d"));
    m.def(
        "eval_at_root", [](const py::iterable& coeffs, int d) { return residue_dict(eval_at_root(poly_from(coeffs), d)); },
        py::arg("coeffs"), py::arg("d"));
    m.def("q_lucas", [](int a, int b, int d) { return residue_dict(q_lucas(a, b, d)); }, py::arg("a"), py::arg("b"),
          py::arg("d"));

    m.def("classify_vertices", [](const NonCrossingForest& f) {
        const auto vc = classify_vertices(f);
        py::dict out;
        out["good"] = vc.good;
        out["bad"] = vc.bad;
        return out;
    });
    m.def("all_marks", &all_marks);
    m.def("construct_cd", &construct_cd, py::arg("phi"), py::arg("v"), py::arg("d"));
    m.def("decompose_dd", [](const NonCrossingForest& f, int d) { return decomposition(decompose_dd(f, d)); },
          py::arg("forest"), py::arg("d"));
    m.def("construct_c2_odd", &construct_c2_odd, py::arg("phi"), py::arg("mark"));
    m.def("decompose_d2_odd", [](const NonCrossingForest& f) { return decomposition(decompose_d2_odd(f)); },
          py::arg("forest"));

    m.def("divisors", &divisors);
    m.def("closed_form_eval", [](int n, int k, int d) { return to_py(closed_form_eval(n, k, d)); }, py::arg("n"),
          py::arg("k"), py::arg("d"));
    m.def("fixed_count_brute", &fixed_count_brute, py::arg("n"), py::arg("k"), py::arg("d"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "fixed_count_bijection",
        [](int n, int k, int d) {
            const auto r = fixed_count_bijection(n, k, d);
            return r.count;
        },
        py::arg("n"), py::arg("k"), py::arg("d"));
    m.def(
        "verify_csp",
        [](int n, int k) {
            CspReport r;
            {
                py::gil_scoped_release release;
                r = verify_csp(n, k);
            }
            return report_dict(r);
        },
        py::arg("n"), py::arg("k"));
    m.def("check_odd_half_turn_identity", &check_odd_half_turn_identity, py::arg("n_prime"), py::arg("k_prime"));
}
