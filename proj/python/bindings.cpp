#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnet/graph.hpp"
#include "qnet/kalman.hpp"
#include "qnet/lin.hpp"
#include "qnet/matching.hpp"
#include "qnet/network_io.hpp"
#include "qnet/planner.hpp"
#include "qnet/report.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> labels(const qnet::QDigraph& g, const std::vector<qnet::VertexId>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

py::dict driver_dict(const qnet::QDigraph& g, const qnet::DriverAssignment& d) {
    py::dict out;
    out["n_d"] = d.n_d;
    out["unmatched"] = labels(g, d.unmatched);
    out["chosen_drivers"] = labels(g, d.chosen_drivers);
    return out;
}

}  // namespace

PYBIND11_MODULE(_qnet, m) {
    m.doc() = "Structural controllability and single-driver augmentation of directed networks";

    py::register_exception<qnet::NetworkError>(m, "NetworkError", PyExc_ValueError);

    py::class_<qnet::QDigraph>(m, "Network")
        .def_property_readonly("state_labels",
                               [](const qnet::QDigraph& g) { return labels(g, {g.states().begin(), g.states().end()}); })
        .def_property_readonly("driver_labels",
                               [](const qnet::QDigraph& g) { return labels(g, {g.drivers().begin(), g.drivers().end()}); })
        .def_property_readonly("edges",
                               [](const qnet::QDigraph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& e : g.edges())
                                       out.emplace_back(g.label(e.src), g.label(e.dst), std::string(qnet::to_string(e.kind)));
                                   return out;
                               })
        .def("to_text", [](const qnet::QDigraph& g) { return qnet::to_text(g); })
        .def("to_dot", [](const qnet::QDigraph& g) { return qnet::to_dot(g); })
        .def("__eq__", [](const qnet::QDigraph& a, const qnet::QDigraph& b) { return a == b; })
        .def("__len__", &qnet::QDigraph::state_count);

    m.def("parse_network", [](const std::string& text) { return qnet::parse_network(text); }, py::arg("text"));

    m.def("maximum_matching", [](const qnet::QDigraph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [s, d] : qnet::maximum_matching(g).edges()) out.emplace_back(g.label(s), g.label(d));
        return out;
    });

    m.def("minimum_drivers", [](const qnet::QDigraph& g) { return driver_dict(g, qnet::minimum_drivers(g)); });

    m.def("lin_check", [](const qnet::QDigraph& g) {
        const auto r = qnet::lin_check(g);
        py::dict out;
        out["controllable"] = r.controllable;
        out["inaccessible"] = labels(g, r.inaccessible);
        if (r.dilation) {
            out["dilation_s"] = labels(g, r.dilation->s_set);
            out["dilation_t"] = labels(g, r.dilation->t_set);
        } else {
            out["dilation_s"] = py::none();
            out["dilation_t"] = py::none();
        }
        return out;
    });

    m.def("analyze", [](const qnet::QDigraph& g) { return qnet::to_text(qnet::analyze(g)); });

    py::class_<qnet::AugmentationPlan>(m, "AugmentationPlan")
        .def_readonly("root", &qnet::AugmentationPlan::root)
        .def_readonly("attachment", &qnet::AugmentationPlan::attachment)
        .def_property_readonly("added_edges",
                               [](const qnet::AugmentationPlan& p) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& e : p.added_edges)
                                       out.emplace_back(e.src, e.dst, std::string(qnet::to_string(e.reason)));
                                   return out;
                               })
        .def_property_readonly("locc_cost_bound", &qnet::AugmentationPlan::locc_cost_bound)
        .def("to_text", [](const qnet::AugmentationPlan& p) { return qnet::plan_to_text(p); });

    m.def("plan_augmentation", &qnet::plan_augmentation, py::arg("network"));
    m.def("apply_plan", &qnet::apply_plan, py::arg("network"), py::arg("plan"));

    m.def(
        "generic_rank_check",
        [](const qnet::QDigraph& g, std::size_t trials, std::uint64_t seed) {
            const auto c = qnet::generic_rank_check(g, std::nullopt, {trials, seed});
            py::dict out;
            out["full_rank"] = c.full_rank;
            out["achieved_rank"] = c.achieved_rank;
            out["n"] = c.n;
            out["trials"] = c.trials;
            out["seed"] = c.seed;
            out["field_prime"] = c.field_prime;
            return out;
        },
        py::arg("network"), py::arg("trials") = 3, py::arg("seed") = 42);

    m.def(
        "contract_supervertex",
        [](const qnet::QDigraph& g, const std::vector<std::string>& cycle) {
            std::vector<qnet::VertexId> ids;
            for (const auto& l : cycle) ids.push_back(g.at(l));
            auto [h, map] = qnet::contract_supervertex(g, ids);
            return py::make_tuple(h, map.representative, map.merged);
        },
        py::arg("network"), py::arg("cycle"));
}
