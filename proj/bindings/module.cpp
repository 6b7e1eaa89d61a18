#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccx/complexes.hpp"
#include "ccx/graph.hpp"
#include "ccx/hseries.hpp"
#include "ccx/macaulay.hpp"
#include "ccx/verification.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const ccx::BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::list to_pylist(const ccx::IntSeq& s) {
    py::list out;
    for (const auto& v : s) out.append(to_pyint(v));
    return out;
}

ccx::BigInt from_pyint(const py::object& o) {
    return ccx::BigInt(py::cast<std::string>(py::str(o)));
}

ccx::IntSeq from_pylist(const py::sequence& s) {
    ccx::IntSeq out;
    for (auto item : s) out.push_back(from_pyint(py::reinterpret_borrow<py::object>(item)));
    return out;
}

ccx::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return ccx::Graph(n, edges);
}

ccx::SignedArrangement make_arrangement(
    int n, const std::vector<std::tuple<std::string, int, int>>& hyps) {
    std::vector<ccx::Hyperplane> out;
    for (const auto& [kind, i, j] : hyps) {
        if (kind == "eq") out.push_back({ccx::Hyperplane::Kind::Eq, i, j});
        else if (kind == "ne") out.push_back({ccx::Hyperplane::Kind::Ne, i, j});
        else if (kind == "zero") out.push_back({ccx::Hyperplane::Kind::Zero, i, 0});
        else throw std::invalid_argument("unknown hyperplane kind: " + kind);
    }
    return ccx::SignedArrangement(n, std::move(out));
}

py::dict summary_dict(const ccx::ComplexSummary& s, size_t faces) {
    py::dict d;
    d["dim"] = s.dim;
    d["f"] = to_pylist(s.f);
    d["h"] = to_pylist(s.h);
    d["pure"] = s.pure;
    d["faces"] = faces;
    return d;
}

py::dict ledger_dict(const ccx::VerificationLedger& ledger) {
    py::dict d;
    d["overall"] = ledger.overall;
    py::list entries;
    for (const auto& e : ledger.entries) {
        py::dict ed;
        ed["name"] = e.name;
        ed["expected"] = e.expected;
        ed["computed"] = e.computed;
        ed["match"] = e.match;
        ed["tag"] = ccx::to_string(e.tag);
        entries.append(ed);
    }
    d["entries"] = entries;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ccx, m) {
    m.doc() = "coloring complexes, h-vectors, and convex-ear inequalities";

    m.def("chromatic_polynomial",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return to_pylist(
                  ccx::chromatic_polynomial(make_graph(n, edges)).coeffs());
          },
          py::arg("n"), py::arg("edges"),
          "coefficients of P_G, constant term first");

    m.def("acyclic_orientation_count",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return to_pyint(
                  ccx::acyclic_orientation_count(make_graph(n, edges)));
          },
          py::arg("n"), py::arg("edges"));

    m.def("color_h",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return to_pylist(
                  ccx::extract_color_h(
                      ccx::chromatic_polynomial(make_graph(n, edges)), n)
                      .values);
          },
          py::arg("n"), py::arg("edges"));

    m.def("unipolar_h",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return to_pylist(
                  ccx::extract_unipolar_h(
                      ccx::chromatic_polynomial(make_graph(n, edges)), n)
                      .values);
          },
          py::arg("n"), py::arg("edges"));

    m.def("matroid_h",
          [](const py::sequence& chi_coeffs) {
              ccx::Polynomial chi(from_pylist(chi_coeffs));
              return to_pylist(
                  ccx::extract_matroid_h(chi, chi.degree() + 1).values);
          },
          py::arg("chi_coeffs"),
          "chi coefficients, constant term first; n = deg chi + 1");

    m.def("bn_h",
          [](const py::sequence& chi_coeffs, int r, int n) {
              return to_pylist(
                  ccx::extract_bn_h(ccx::Polynomial(from_pylist(chi_coeffs)), r, n)
                      .values);
          },
          py::arg("chi_coeffs"), py::arg("r"), py::arg("n"));

    m.def("coloring_complex",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              auto faces = ccx::build_coloring_complex(make_graph(n, edges));
              return summary_dict(ccx::summarize(faces), faces.size());
          },
          py::arg("n"), py::arg("edges"));

    m.def("unipolar_complex",
          [](int n, const std::vector<std::pair<int, int>>& edges, int v) {
              auto faces = ccx::build_unipolar_complex(make_graph(n, edges), v);
              return summary_dict(ccx::summarize(faces), faces.size());
          },
          py::arg("n"), py::arg("edges"), py::arg("vertex"));

    m.def("bn_restriction",
          [](int n, const std::vector<std::tuple<std::string, int, int>>& hyps) {
              auto cells = ccx::build_bn_restriction(make_arrangement(n, hyps));
              return summary_dict(ccx::summarize(cells), cells.size());
          },
          py::arg("n"), py::arg("hyperplanes"));

    m.def("reduced_betti",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return to_pylist(ccx::reduced_betti(
                  ccx::build_coloring_complex(make_graph(n, edges))));
          },
          py::arg("n"), py::arg("edges"),
          "reduced Betti numbers of the coloring complex, from dimension -1");

    m.def("char_poly",
          [](int n, const std::vector<std::tuple<std::string, int, int>>& hyps) {
              auto [chi, r] = ccx::char_poly(make_arrangement(n, hyps));
              return py::make_tuple(to_pylist(chi.coeffs()), r);
          },
          py::arg("n"), py::arg("hyperplanes"));

    m.def("macaulay_bound",
          [](const py::object& h, int i) {
              return to_pyint(ccx::macaulay_bound(from_pyint(h), i));
          },
          py::arg("h"), py::arg("i"));

    m.def("is_m_vector",
          [](const py::sequence& seq) {
              auto v = ccx::is_m_vector(from_pylist(seq));
              return py::make_tuple(v.ok, v.witness ? py::cast(*v.witness)
                                                    : py::none());
          },
          py::arg("seq"));

    m.def("ced_conditions",
          [](const py::sequence& seq) {
              auto rep = ccx::ced_conditions(from_pylist(seq));
              py::dict d;
              d["monotone"] = rep.monotone_ok;
              d["symmetric"] = rep.symmetric_ineq_ok;
              d["g_is_m_vector"] = rep.g_is_m_vector;
              d["g"] = to_pylist(rep.g);
              d["first_failure"] =
                  rep.first_failure ? py::cast(*rep.first_failure) : py::none();
              return d;
          },
          py::arg("seq"));

    m.def("verify_paper_examples",
          [](const std::string& corrupt) {
              return ledger_dict(ccx::verify_paper_examples(corrupt));
          },
          py::arg("corrupt") = std::string());

    m.def("verify_bridges",
          [](int max_n, std::uint64_t seed) {
              return ledger_dict(ccx::verify_bridges(max_n, seed));
          },
          py::arg("max_n") = 4, py::arg("seed") = 0);

    m.def("verify_inequalities",
          [](int max_n, std::uint64_t seed) {
              return ledger_dict(ccx::verify_inequalities(max_n, seed));
          },
          py::arg("max_n") = 4, py::arg("seed") = 0);
}
