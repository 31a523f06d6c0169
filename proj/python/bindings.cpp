#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sqbetti/io.hpp"

namespace py = pybind11;
using namespace sqbetti;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt big_from_py(const py::int_& v) {
    return BigInt(py::str(v).cast<std::string>());
}

CornerSpec spec_from_args(int n, const std::vector<std::pair<int, int>>& corners,
                          const std::vector<py::int_>& values) {
    CornerSpec spec;
    spec.n = n;
    for (const auto& [k, ell] : corners) spec.corners.push_back(Corner{k, ell});
    for (const py::int_& v : values) spec.values.push_back(big_from_py(v));
    return spec;
}

py::dict report_to_py(const CornerReport& report) {
    py::list corners, values;
    for (const Corner& c : report.corners) corners.append(py::make_tuple(c.k, c.ell));
    for (const BigInt& v : report.values) values.append(to_py(v));
    py::dict out;
    out["corners"] = corners;
    out["values"] = values;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Betti tables, extremal corners, and realizability for squarefree "
              "strongly stable monomial ideals";

    py::register_exception<contract_error>(m, "ContractError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<not_stable_error>(m, "NotStableError", PyExc_ValueError);
    py::register_exception<infeasible_error>(m, "InfeasibleError", PyExc_RuntimeError);

    py::class_<Monomial>(m, "Monomial")
        .def(py::init([](int n, const std::vector<int>& support) {
                 return Monomial::from_support(n, support);
             }),
             py::arg("n"), py::arg("support"))
        .def_static("parse",
                    [](const std::string& text, std::optional<int> n) {
                        return parse_monomial(text, n);
                    },
                    py::arg("text"), py::arg("n") = std::nullopt)
        .def_property_readonly("n", &Monomial::ambient)
        .def_property_readonly("degree", &Monomial::degree)
        .def_property_readonly("support", [](const Monomial& u) { return u.support(); })
        .def_property_readonly("max_index", &Monomial::max_index)
        .def_property_readonly("min_index", &Monomial::min_index)
        .def("divides", &Monomial::divides)
        .def("__str__", &Monomial::str)
        .def("__repr__", [](const Monomial& u) { return "Monomial('" + u.str() + "')"; })
        .def("__eq__", [](const Monomial& a, const Monomial& b) { return a == b; })
        .def("__hash__",
             [](const Monomial& u) { return py::hash(py::make_tuple(u.ambient(), u.mask())); });

    py::class_<MonomialIdeal>(m, "Ideal")
        .def_property_readonly("n", &MonomialIdeal::ambient)
        .def_property_readonly("generators", [](const MonomialIdeal& I) { return I.generators(); })
        .def_property_readonly("generators_by_degree",
                               [](const MonomialIdeal& I) {
                                   py::dict out;
                                   for (const auto& [d, mons] : I.generators_by_degree())
                                       out[py::int_(d)] = mons;
                                   return out;
                               })
        .def_property_readonly("indeg", &MonomialIdeal::indeg)
        .def_property_readonly("is_zero", &MonomialIdeal::is_zero)
        .def("contains", &MonomialIdeal::contains)
        .def("__str__", [](const MonomialIdeal& I) { return emit_ideal(I); })
        .def("__eq__",
             [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; });

    m.def("slex_cmp", [](const Monomial& u, const Monomial& v) {
        switch (slex_cmp(u, v)) {
            case Ordering::greater: return 1;
            case Ordering::less: return -1;
            default: return 0;
        }
    });
    m.def("gap_profile", [](const Monomial& u) {
        std::vector<std::pair<int, int>> out;
        for (const GapEntry& g : gap_profile(u)) out.emplace_back(g.position, g.width);
        return out;
    });
    m.def("joint", [](const Monomial& u, const std::vector<int>& extras) {
        return joint(u, extras);
    });
    m.def("shadow",
          [](const std::vector<Monomial>& T) { return shadow(std::span(T.data(), T.size())); });
    m.def("enumerate_A",
          [](int n, int k, int ell) { return enumerate_A(n, k, ell).members; });
    m.def("next_in_A", &next_in_A);
    m.def("prev_in_A", &prev_in_A);
    m.def("segment", &segment, py::arg("u"), py::arg("v"), py::arg("closed_right") = true);

    m.def("minimal_generators", [](int n, const std::vector<Monomial>& raw) {
        return minimal_generators(n, std::span(raw.data(), raw.size()));
    });
    m.def("parse_ideal", [](const std::string& text) { return parse_ideal(text); });
    m.def("classify", [](const MonomialIdeal& I) {
        StabilityClass c = classify(I);
        py::dict out;
        out["stable"] = c.is_stable;
        out["strongly_stable"] = c.is_strongly_stable;
        out["lex"] = c.is_lex;
        return out;
    });
    m.def("strongly_stable_closure", [](const std::vector<Monomial>& U) {
        return strongly_stable_closure(std::span(U.data(), U.size()));
    });
    m.def("shad_power", [](const std::vector<Monomial>& T, int i) {
        return shad_power(std::span(T.data(), T.size()), i);
    });
    m.def("bshad", [](const std::vector<Monomial>& U, int k2, int ell2) {
        return bshad(std::span(U.data(), U.size()), k2, ell2);
    });
    m.def("min_bshad", &min_bshad);

    m.def("graded_betti", [](const MonomialIdeal& I) {
        BettiTable table = graded_betti(I);
        py::dict out;
        for (const auto& [ij, v] : table.entries())
            out[py::make_tuple(ij.first, ij.second)] = to_py(v);
        return out;
    });
    m.def("render_betti", [](const MonomialIdeal& I) { return render_betti(graded_betti(I)); });
    m.def("extremal_betti", [](const MonomialIdeal& I) { return report_to_py(extremal_betti(I)); });
    m.def("degree_sequence", [](const MonomialIdeal& I) {
        DegreeSequence seq = degree_sequence(I);
        py::dict out;
        out["degrees"] = seq.degrees;
        out["deltas"] = seq.deltas;
        out["extremal_indices"] = seq.extremal_indices;
        out["degree_length"] = seq.degree_length();
        return out;
    });

    m.def("pascal_row", [](int n, int q) {
        py::list out;
        for (const BigInt& v : pascal_row(n, q)) out.append(to_py(v));
        return out;
    });
    m.def("count_upto", [](const Monomial& u) { return to_py(count_upto(u)); });
    m.def("count_strictly_above",
          [](const Monomial& u) { return to_py(count_strictly_above(u)); });
    m.def("oracle_position", [](const Monomial& u) { return to_py(oracle_position(u)); });
    m.def("count_upto_traced", [](const Monomial& u) {
        DecompositionTrace trace = count_upto_traced(u);
        py::list steps;
        for (const TraceStep& s : trace.steps) {
            py::dict step;
            step["position"] = s.position;
            step["binomial"] = py::make_tuple(s.top, s.bottom);
            step["selected"] = s.selected;
            step["contributed"] = to_py(s.contributed);
            steps.append(step);
        }
        py::dict out;
        out["position"] = to_py(trace.total);
        out["terms"] = trace.term_count;
        out["steps"] = steps;
        return out;
    });

    m.def("chain_basic_monomials", [](int n, int ell) {
        py::list rows;
        for (const ChainRow& row : chain_basic_monomials(n, ell))
            rows.append(py::make_tuple(row.v, row.w));
        return rows;
    });
    m.def("lex_corner_ideal", &lex_corner_ideal, py::arg("n"), py::arg("l1"));
    m.def("feasibility_bounds",
          [](int n, const std::vector<std::pair<int, int>>& corners,
             const std::vector<py::int_>& values) {
              FeasibilityReport report = feasibility_bounds(spec_from_args(n, corners, values));
              py::list rows;
              for (const CornerBound& b : report.per_corner) {
                  py::dict row;
                  row["n_i"] = b.upper ? py::object(to_py(*b.upper)) : py::none();
                  row["p_i"] = b.strictly_above ? py::object(to_py(*b.strictly_above)) : py::none();
                  row["admissible"] =
                      b.admissible ? py::object(to_py(*b.admissible)) : py::none();
                  rows.append(row);
              }
              py::dict out;
              out["feasible"] = report.feasible;
              out["per_corner"] = rows;
              out["failing_corner"] =
                  report.failing_corner ? py::object(py::int_(*report.failing_corner)) : py::none();
              out["witness"] =
                  report.witness ? py::object(py::str(report.witness->str())) : py::none();
              out["detail"] = report.detail;
              return out;
          },
          py::arg("n"), py::arg("corners"), py::arg("values"));
    m.def("basic_monomials",
          [](int n, const std::vector<std::pair<int, int>>& corners,
             const std::vector<py::int_>& values) {
              return basic_monomials(spec_from_args(n, corners, values)).per_corner;
          },
          py::arg("n"), py::arg("corners"), py::arg("values"));
    m.def("construct_ideal",
          [](int n, const std::vector<std::pair<int, int>>& corners,
             const std::vector<py::int_>& values) {
              return construct_ideal(spec_from_args(n, corners, values));
          },
          py::arg("n"), py::arg("corners"), py::arg("values"));
    m.def("enumerate_corner_configs",
          [](int n, int min_initial_degree, int bound) {
              py::list out;
              for (const CornerConfig& cfg : enumerate_corner_configs(n, min_initial_degree, bound)) {
                  py::dict row = report_to_py(cfg.report);
                  row["witness"] = cfg.witness;
                  out.append(row);
              }
              return out;
          },
          py::arg("n"), py::arg("min_initial_degree") = 1, py::arg("bound") = 5);
}
