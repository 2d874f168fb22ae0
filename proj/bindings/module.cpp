// Python bindings for the main library operations. Domains cross the
// boundary as the Domain class; orders as lists of labels.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "condorcet/catalog.hpp"
#include "condorcet/composition.hpp"
#include "condorcet/core.hpp"
#include "condorcet/enumeration.hpp"
#include "condorcet/graphs.hpp"
#include "condorcet/properties.hpp"
#include "condorcet/text_format.hpp"

namespace py = pybind11;
using namespace condorcet;

namespace {

Domain domain_from_lists(const std::vector<std::vector<Alternative>>& rankings) {
    std::set<LinearOrder> orders;
    for (const auto& ranking : rankings) orders.insert(LinearOrder(ranking));
    return Domain(std::move(orders));
}

std::vector<std::vector<Alternative>> domain_to_lists(const Domain& domain) {
    std::vector<std::vector<Alternative>> out;
    for (const LinearOrder& order : domain.orders()) out.push_back(order.ranking());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Condorcet domain toolkit";

    py::class_<Domain>(m, "Domain")
        .def(py::init(&domain_from_lists), py::arg("orders"))
        .def_static("from_text", &parse_domain_text, py::arg("text"))
        .def("to_text", &render_domain_text)
        .def("orders", &domain_to_lists)
        .def("alternatives",
             [](const Domain& d) {
                 return std::vector<Alternative>(d.alternatives().begin(), d.alternatives().end());
             })
        .def("__len__", &Domain::size)
        .def("__eq__", [](const Domain& a, const Domain& b) { return a == b; })
        .def("__repr__", [](const Domain& d) { return "Domain(" + domain_inline_text(d) + ")"; });

    m.def("is_condorcet", &is_condorcet, py::arg("domain"));
    m.def("is_maximal", &is_maximal, py::arg("domain"));
    m.def("is_ample", &is_ample, py::arg("domain"));
    m.def("is_copious", &is_copious, py::arg("domain"));
    m.def("has_maximal_width", &has_maximal_width, py::arg("domain"));
    m.def("is_arrow_single_peaked", &is_arrow_single_peaked, py::arg("domain"));
    m.def("is_single_crossing", &is_single_crossing, py::arg("domain"));
    m.def(
        "is_single_peaked",
        [](const Domain& domain, const std::vector<Alternative>& axis) {
            return is_single_peaked_wrt(domain, Axis(axis));
        },
        py::arg("domain"), py::arg("axis"));
    m.def(
        "single_peaked_domain",
        [](const std::vector<Alternative>& axis) { return generate_single_peaked(Axis(axis)); },
        py::arg("axis"));

    m.def("compose", &nl_compose, py::arg("d1"), py::arg("d2"));
    m.def(
        "decompose",
        [](const Domain& domain) {
            std::vector<py::tuple> out;
            for (const Decomposition& part : nl_decompose(domain))
                out.push_back(py::make_tuple(part.roles.x, part.roles.y, part.d1, part.d2));
            return out;
        },
        py::arg("domain"));
    m.def("is_right_obstruction", &is_right_obstruction, py::arg("domain"), py::arg("a"),
          py::arg("b"), py::arg("c"));
    m.def(
        "theorem_hypotheses",
        [](const Domain& d1, const Domain& d2) {
            HypothesisReport r = theorem_hypotheses(d1, d2);
            py::dict out;
            out["e_is_condorcet"] = r.e_is_condorcet;
            out["x_never_obstructs_in_d2"] = r.x_never_obstructs_in_d2;
            out["y_never_obstructs_in_d1"] = r.y_never_obstructs_in_d1;
            out["d1_maximal"] = r.d1_maximal;
            out["d2_maximal"] = r.d2_maximal;
            out["d1_ample"] = r.d1_ample;
            out["d2_ample"] = r.d2_ample;
            out["d1_copious"] = r.d1_copious;
            out["d2_copious"] = r.d2_copious;
            return out;
        },
        py::arg("d1"), py::arg("d2"));

    m.def("enumerate_maximal", &enumerate_maximal, py::arg("n"), py::arg("allow_large") = false);
    m.def("canonical_form", &canonical_form, py::arg("domain"));

    m.def(
        "graph_summary",
        [](const Domain& domain) {
            DomainGraph g = build_graph(domain);
            return py::make_tuple(g.vertices.size(), g.edges.size(), is_connected(g), is_path(g));
        },
        py::arg("domain"));
    m.def(
        "to_dot", [](const Domain& domain) { return to_dot(build_graph(domain)); },
        py::arg("domain"));

    m.def("catalog_ids", [] {
        std::vector<std::string> ids;
        for (const CatalogEntry& entry : catalog_entries()) ids.push_back(entry.id);
        return ids;
    });
    m.def(
        "catalog_domain",
        [](const std::string& name) { return catalog_get(name).matrix_orders; },
        py::arg("id_or_alias"));
    m.def("catalog_verify_ok", [] { return report_matches_ledger(verify_catalog()); });
}
