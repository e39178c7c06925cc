// Python bindings for the core operations. Values cross the boundary as
// Python ints of arbitrary size (converted through decimal strings).

#include "zadic/dynamics.hpp"
#include "zadic/errors.hpp"
#include "zadic/params.hpp"
#include "zadic/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

zadic::Nat nat_from_py(py::handle obj) {
    return zadic::parse_nat(py::cast<std::string>(py::str(obj)));
}

py::int_ py_from_nat(const zadic::Nat& n) {
    PyObject* obj = PyLong_FromString(n.str().c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

py::list py_from_nats(const std::vector<zadic::Nat>& values) {
    py::list out;
    for (const auto& v : values) {
        out.append(py_from_nat(v));
    }
    return out;
}

std::string status_name(zadic::TrajectoryStatus status) {
    return status == zadic::TrajectoryStatus::CycleFound ? "cycle-found"
                                                         : "budget-exhausted";
}

zadic::SweepOptions make_options(std::uint64_t budget, unsigned workers) {
    zadic::SweepOptions options;
    options.budget = budget;
    options.workers = workers;
    return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact base-k digit-map dynamics: orbits, cycle catalogs, and exhaustive "
        "range verification";
    m.attr("__version__") = "0.1.0";

    py::register_exception<zadic::InvalidParameter>(m, "InvalidParameter",
                                                    PyExc_ValueError);
    py::register_exception<zadic::InvalidDigit>(m, "InvalidDigit", PyExc_ValueError);
    py::register_exception<zadic::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<zadic::TheoremViolation>(m, "TheoremViolation",
                                                    PyExc_RuntimeError);

    py::class_<zadic::Parameters>(m, "Parameters")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("k"), py::arg("p"))
        .def_property_readonly("k", &zadic::Parameters::k)
        .def_property_readonly("p", &zadic::Parameters::p)
        .def_property_readonly("r", &zadic::Parameters::r)
        .def_property_readonly("s", &zadic::Parameters::s)
        .def_property_readonly("assumptions_hold", &zadic::Parameters::assumptions_hold)
        .def("__repr__", [](const zadic::Parameters& p) {
            return "Parameters(k=" + std::to_string(p.k()) +
                   ", p=" + std::to_string(p.p()) + ")";
        });

    py::class_<zadic::AssumptionReport>(m, "AssumptionReport")
        .def_property_readonly(
            "parameters", [](const zadic::AssumptionReport& r) { return r.parameters; })
        .def_readonly("holds_H", &zadic::AssumptionReport::holds_H)
        .def_readonly("holds_H1", &zadic::AssumptionReport::holds_H1)
        .def_readonly("holds_H2", &zadic::AssumptionReport::holds_H2)
        .def_property_readonly(
            "f_max", [](const zadic::AssumptionReport& r) { return py_from_nat(r.f_max); })
        .def("__repr__", [](const zadic::AssumptionReport& r) {
            return "AssumptionReport(k=" + std::to_string(r.parameters.k()) +
                   ", p=" + std::to_string(r.parameters.p()) +
                   ", holds_H=" + (r.holds_H ? "True" : "False") + ")";
        });

    py::class_<zadic::Trajectory>(m, "Trajectory")
        .def_property_readonly(
            "start", [](const zadic::Trajectory& t) { return py_from_nat(t.start); })
        .def_property_readonly(
            "steps", [](const zadic::Trajectory& t) { return py_from_nats(t.steps); })
        .def_readonly("transient_length", &zadic::Trajectory::transient_length)
        .def_property_readonly(
            "cycle", [](const zadic::Trajectory& t) { return py_from_nats(t.cycle); })
        .def_property_readonly(
            "status", [](const zadic::Trajectory& t) { return status_name(t.status); })
        .def("__repr__", [](const zadic::Trajectory& t) {
            return "Trajectory(start=" + t.start.str() +
                   ", steps=" + std::to_string(t.steps.size()) +
                   ", status=" + status_name(t.status) + ")";
        });

    py::class_<zadic::CycleRecord>(m, "CycleRecord")
        .def_property_readonly(
            "cycle", [](const zadic::CycleRecord& r) { return py_from_nats(r.cycle); })
        .def_property_readonly("first_witness", [](const zadic::CycleRecord& r) {
            return py_from_nat(r.first_witness);
        })
        .def_readonly("basin_count", &zadic::CycleRecord::basin_count)
        .def_readonly("max_transient", &zadic::CycleRecord::max_transient)
        .def("__repr__", [](const zadic::CycleRecord& r) {
            std::string cycle;
            for (const auto& v : r.cycle) {
                cycle += (cycle.empty() ? "" : ", ") + v.str();
            }
            return "CycleRecord(cycle=[" + cycle +
                   "], basin_count=" + std::to_string(r.basin_count) + ")";
        });

    py::class_<zadic::RangeReport>(m, "RangeReport")
        .def_property_readonly(
            "parameters", [](const zadic::RangeReport& r) { return r.parameters; })
        .def_property_readonly(
            "n_lo", [](const zadic::RangeReport& r) { return py_from_nat(r.n_lo); })
        .def_property_readonly(
            "n_hi", [](const zadic::RangeReport& r) { return py_from_nat(r.n_hi); })
        .def_readonly("all_reach_M", &zadic::RangeReport::all_reach_M)
        .def_readonly("cycles", &zadic::RangeReport::cycles)
        .def_readonly("max_transient", &zadic::RangeReport::max_transient)
        .def_property_readonly("budget_exhausted_starts",
                               [](const zadic::RangeReport& r) {
                                   return py_from_nats(r.budget_exhausted_starts);
                               });

    py::class_<zadic::CatalogResult>(m, "CatalogResult")
        .def_readonly("cycles", &zadic::CatalogResult::cycles)
        .def_property_readonly("budget_exhausted_starts",
                               [](const zadic::CatalogResult& r) {
                                   return py_from_nats(r.budget_exhausted_starts);
                               });

    py::class_<zadic::GridCell>(m, "GridCell")
        .def_readonly("assumptions", &zadic::GridCell::assumptions)
        .def_readonly("report", &zadic::GridCell::report);

    m.def(
        "digits_of",
        [](py::object n, std::uint64_t k) { return zadic::digits_of(nat_from_py(n), k).digits; },
        py::arg("n"), py::arg("k"),
        "Base-k digits of n, least-significant first ([0] for n = 0).");

    m.def(
        "value_of",
        [](const std::vector<std::uint64_t>& digits, std::uint64_t k) {
            return py_from_nat(zadic::value_of(digits, k));
        },
        py::arg("digits"), py::arg("k"),
        "Horner evaluation of a least-significant-first digit list.");

    m.def(
        "digit_map",
        [](std::uint64_t x, std::uint64_t p) { return py_from_nat(zadic::digit_map(x, p)); },
        py::arg("x"), py::arg("p"), "The piecewise digit map.");

    m.def(
        "z_transform",
        [](py::object n, std::uint64_t k, std::uint64_t p) {
            return py_from_nat(zadic::z_transform(nat_from_py(n), zadic::Parameters(k, p)));
        },
        py::arg("n"), py::arg("k"), py::arg("p"),
        "Sum of the digit map over the base-k digits of n.");

    m.def("decompose", &zadic::decompose_k, py::arg("k"), py::arg("p"),
          "The unique (r, s) with k = r*p + s + 1 and 1 <= s <= p.");

    m.def("check_assumptions", &zadic::check_assumptions, py::arg("k"), py::arg("p"),
          "Evaluate all assumption forms plus the digit-map maximum.");

    m.def(
        "contraction_bound_holds",
        [](py::object n, std::uint64_t k, std::uint64_t p) {
            return zadic::contraction_bound_holds(nat_from_py(n), zadic::Parameters(k, p));
        },
        py::arg("n"), py::arg("k"), py::arg("p"),
        "Whether z_transform(n) < k^(m-1) for the m-digit n (m >= 3, conforming k, p).");

    m.def(
        "trajectory",
        [](py::object n, std::uint64_t k, std::uint64_t p, std::uint64_t budget) {
            return zadic::trajectory(nat_from_py(n), zadic::Parameters(k, p), budget);
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("budget") = zadic::kDefaultBudget,
        "Orbit of n with first-repeat cycle detection.");

    m.def(
        "verify_range",
        [](std::uint64_t k, std::uint64_t p, py::object n_lo, py::object n_hi,
           std::uint64_t budget, unsigned workers) {
            return zadic::verify_range(zadic::Parameters(k, p), nat_from_py(n_lo),
                                       nat_from_py(n_hi), make_options(budget, workers));
        },
        py::arg("k"), py::arg("p"), py::arg("n_lo"), py::arg("n_hi"),
        py::arg("budget") = zadic::kDefaultBudget, py::arg("workers") = 0,
        "Run every start in [n_lo, n_hi] to its cycle and aggregate.");

    m.def(
        "cycle_catalog",
        [](std::uint64_t k, std::uint64_t p, py::object n_max, std::uint64_t budget,
           unsigned workers) {
            return zadic::cycle_catalog(zadic::Parameters(k, p), nat_from_py(n_max),
                                        make_options(budget, workers));
        },
        py::arg("k"), py::arg("p"), py::arg("n_max"),
        py::arg("budget") = zadic::kDefaultBudget, py::arg("workers") = 0,
        "Distinct cycles reached from starts 1..n_max, sorted by first witness.");

    m.def(
        "grid_sweep",
        [](std::uint64_t k_lo, std::uint64_t k_hi, std::uint64_t p_lo, std::uint64_t p_hi,
           py::object n_max, std::uint64_t budget, unsigned workers) {
            return zadic::grid_sweep(k_lo, k_hi, p_lo, p_hi, nat_from_py(n_max),
                                     make_options(budget, workers));
        },
        py::arg("k_lo"), py::arg("k_hi"), py::arg("p_lo"), py::arg("p_hi"),
        py::arg("n_max"), py::arg("budget") = zadic::kDefaultBudget,
        py::arg("workers") = 0,
        "One verified cell per (k, p), ordered by (p, k).");
}
