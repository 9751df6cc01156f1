#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sclab/bounds.hpp"
#include "sclab/constructions.hpp"
#include "sclab/dfa_json.hpp"
#include "sclab/lab.hpp"
#include "sclab/minimize.hpp"
#include "sclab/tableau.hpp"
#include "sclab/witnesses.hpp"

namespace py = pybind11;
using namespace sclab;

namespace {

std::vector<BoolOp> ops_from(const std::vector<std::string>& names) {
    std::vector<BoolOp> ops;
    for (const auto& n : names) {
        ops.push_back(parse_bool_op(n));
    }
    return ops;
}

py::dict row_dict(const ExperimentRow& r) {
    py::dict d;
    d["shape"] = std::string(shape_name(r.shape));
    d["ops"] = ops_text(r.ops);
    d["m"] = r.m;
    d["n"] = r.n;
    d["p"] = r.p;
    d["predicted"] = r.predicted ? py::cast(*r.predicted) : py::none();
    d["measured"] = r.measured;
    d["reachable"] = r.reachable;
    d["match"] = r.match ? py::cast(*r.match) : py::none();
    d["wall_ms"] = r.wall_ms;
    d["error"] = r.error;
    return d;
}

}  // namespace

PYBIND11_MODULE(_sclab, m) {
    m.doc() = "State complexity of combined catenation and boolean operations";

    py::register_exception<StateLimitExceeded>(m, "StateLimitExceeded", PyExc_RuntimeError);

    py::class_<Dfa>(m, "Dfa")
        .def(py::init([](std::vector<std::string> alphabet, State initial, std::vector<State> finals,
                         const std::vector<std::vector<State>>& delta) {
                 return Dfa::from_rows(std::move(alphabet), initial, std::move(finals), delta);
             }),
             py::arg("alphabet"), py::arg("initial"), py::arg("finals"), py::arg("delta"))
        .def_property_readonly("alphabet", &Dfa::alphabet)
        .def_property_readonly("state_count", &Dfa::state_count)
        .def_property_readonly("initial", &Dfa::initial)
        .def_property_readonly("finals", &Dfa::finals)
        .def("delta", &Dfa::delta)
        .def("accepts", [](const Dfa& d, const std::string& w) { return d.accepts(parse_word(d, w)); })
        .def("to_json", [](const Dfa& d) { return write_dfa(d); })
        .def_static("from_json", [](const std::string& s) { return read_dfa(s); })
        .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
        .def("__repr__", [](const Dfa& d) {
            return "<Dfa states=" + std::to_string(d.state_count()) +
                   " letters=" + std::to_string(d.alphabet_size()) + ">";
        });

    m.def("minimize", &minimize);
    m.def("state_complexity", &state_complexity);
    m.def("is_isomorphic", &is_isomorphic);

    m.def("brzozowski",
          [](std::size_t n, std::vector<std::string> alphabet, const std::string& cycle,
             const std::string& transposition, const std::string& contraction) {
              return brzozowski(BrzozowskiSpec::from_slots(n, std::move(alphabet), cycle,
                                                           transposition, contraction));
          },
          py::arg("n"), py::arg("alphabet"), py::arg("cycle") = "-",
          py::arg("transposition") = "-", py::arg("contraction") = "-");
    m.def("witness", [](const std::string& shape, std::size_t mm, std::size_t n, std::size_t p) {
        const auto w = witness(parse_shape(shape), mm, n, p);
        return std::vector<Dfa>{w[0], w[1], w[2]};
    });

    m.def("build",
          [](const std::string& tree, const std::vector<Dfa>& operands, std::size_t max_states) {
              return build_tree(parse_tree(tree), operands, {max_states}).dfa();
          },
          py::arg("tree"), py::arg("operands"), py::arg("max_states") = 0);

    m.def("bound",
          [](const std::string& shape, const std::vector<std::string>& ops, Count mm, Count n,
             Count p) {
              const Bound b = bound({parse_shape(shape), ops_from(ops), mm, n, p});
              return py::make_tuple(b.value ? py::cast(*b.value) : py::none(), b.formula);
          },
          py::arg("shape"), py::arg("ops"), py::arg("m"), py::arg("n"), py::arg("p"));

    m.def("verify",
          [](const std::string& shape, const std::vector<std::string>& ops, std::size_t mm,
             std::size_t n, std::size_t p, std::size_t max_states) {
              ExperimentRow r;
              {
                  py::gil_scoped_release release;
                  r = verify(parse_shape(shape), ops_from(ops), mm, n, p, {max_states});
              }
              return row_dict(r);
          },
          py::arg("shape"), py::arg("ops"), py::arg("m"), py::arg("n"), py::arg("p"),
          py::arg("max_states") = kDefaultMaxStates);

    m.def("sweep_csv",
          [](const std::string& shape, const std::vector<std::string>& ops, const std::string& m_range,
             const std::string& n_range, const std::string& p_range, std::size_t jobs) {
              std::vector<ExperimentRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = sweep(parse_shape(shape), ops_from(ops), parse_range(m_range),
                               parse_range(n_range), parse_range(p_range), {kDefaultMaxStates, jobs});
              }
              return rows_to_csv(rows);
          },
          py::arg("shape"), py::arg("ops"), py::arg("m"), py::arg("n"), py::arg("p"),
          py::arg("jobs") = 1);

    m.def("saturate",
          [](const std::string& op, std::size_t rows, std::size_t cols, const std::string& cells) {
              const Tableau t = Tableau::parse(rows, cols, cells);
              const Tableau s = op == "xor" ? saturate_xor(t) : saturate_union(t);
              std::vector<std::pair<std::size_t, std::size_t>> out;
              for (const auto& c : s.cells()) {
                  out.push_back(c);
              }
              return out;
          },
          py::arg("op"), py::arg("rows"), py::arg("cols"), py::arg("cells"));
    m.def("count_union_classes", [](std::size_t n, std::size_t p) {
        const auto c = count_union_classes(n, p);
        return py::make_tuple(c.without_origin, c.with_origin);
    });
    m.def("xor_demo", [] {
        const XorReport r = xor_counterexample();
        py::dict d;
        d["measured"] = r.measured;
        d["reachable"] = r.reachable;
        d["upper_bound"] = r.upper_bound;
        d["equivalent_pairs"] = r.equivalent_pairs;
        return d;
    });
}
