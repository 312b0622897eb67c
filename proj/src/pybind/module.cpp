#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadfunc/derive.hpp"
#include "quadfunc/families.hpp"
#include "quadfunc/induction.hpp"
#include "quadfunc/report.hpp"
#include "quadfunc/solve.hpp"

namespace py = pybind11;

namespace {

using quadfunc::Json;

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

quadfunc::SignPolicy make_policy(const std::string& name, std::uint64_t seed) {
    if (name == "all-plus") return quadfunc::SignPolicy::all_plus();
    if (name == "all-minus") return quadfunc::SignPolicy::all_minus();
    if (name == "seeded") return quadfunc::SignPolicy::seeded(seed);
    throw quadfunc::DomainError("unknown sign policy: " + name);
}

quadfunc::FamilyKind make_kind(const std::string& name) {
    if (name == "zero") return quadfunc::FamilyKind::Zero;
    if (name == "linear") return quadfunc::FamilyKind::Linear;
    if (name == "reciprocal") return quadfunc::FamilyKind::Reciprocal;
    throw quadfunc::DomainError("unknown family kind: " + name);
}

}  // namespace

PYBIND11_MODULE(_quadfunc, m) {
    m.doc() = "Exact verification toolkit for f(u^2 + k v^2) = f^2(u) + k f^2(v)";
    m.attr("__version__") = "0.1.0";

    m.def(
        "representations",
        [](long long k, long long n) {
            std::vector<std::pair<long long, long long>> out;
            for (const auto& r : quadfunc::representations(quadfunc::FormK(k), n))
                out.emplace_back(r.u, r.v);
            return out;
        },
        py::arg("k"), py::arg("n"),
        "All (u, v) with u, v >= 1 and u^2 + k v^2 = n, sorted by u.");

    m.def(
        "collisions",
        [](long long k, long long nmax) {
            py::list out;
            for (const auto& [n, reps] : quadfunc::collisions(quadfunc::FormK(k), nmax)) {
                py::list rl;
                for (const auto& r : reps) rl.append(py::make_tuple(r.u, r.v));
                out.append(py::make_tuple(n, rl));
            }
            return out;
        },
        py::arg("k"), py::arg("nmax"));

    m.def(
        "abcd_instance",
        [](long long a, long long b, long long c, long long d, long long k) {
            auto inst = quadfunc::abcd_instance({a, b, c, d, k});
            return py::make_tuple(py::make_tuple(inst.lhs.u, inst.lhs.v),
                                  py::make_tuple(inst.rhs.u, inst.rhs.v), inst.lhs.n);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("k"));

    m.def(
        "derive_table",
        [](long long k, long long target, long long scan, int degree_cap) {
            auto result = quadfunc::derive_expressions(quadfunc::FormK(k), target,
                                                       {scan, degree_cap});
            return json_to_py(quadfunc::derive_payload(result));
        },
        py::arg("k"), py::arg("target"), py::arg("scan") = 2000, py::arg("degree_cap") = 8);

    m.def(
        "solve_base",
        [](long long k, long long scan, int degree_cap) {
            quadfunc::SolveBudget budget;
            budget.derivation = {scan, degree_cap};
            auto report = quadfunc::solve_base(quadfunc::FormK(k), budget);
            return json_to_py(quadfunc::solve_payload(report));
        },
        py::arg("k"), py::arg("scan") = 2000, py::arg("degree_cap") = 8);

    m.def(
        "verify_family",
        [](const std::string& kind, long long k, long long umax, const std::string& policy,
           std::uint64_t seed, const std::map<long long, std::string>& mutations) {
            quadfunc::Family family(make_kind(kind), quadfunc::FormK(k), make_policy(policy, seed));
            for (const auto& [n, v] : mutations)
                family.override_value(n, quadfunc::BigRat::parse(v));
            auto result = quadfunc::verify_family(family, umax);
            std::vector<quadfunc::VerifyRun> runs{{make_kind(kind), policy, result}};
            return json_to_py(quadfunc::verify_payload(k, umax, runs));
        },
        py::arg("kind"), py::arg("k"), py::arg("umax") = 300, py::arg("policy") = "all-plus",
        py::arg("seed") = 1, py::arg("mutations") = std::map<long long, std::string>{});

    m.def(
        "family_value",
        [](const std::string& kind, long long k, long long n, const std::string& policy,
           std::uint64_t seed) {
            quadfunc::Family family(make_kind(kind), quadfunc::FormK(k), make_policy(policy, seed));
            return family.value(n).str();
        },
        py::arg("kind"), py::arg("k"), py::arg("n"), py::arg("policy") = "all-plus",
        py::arg("seed") = 1);

    m.def(
        "threshold_A", [](long long k) { return quadfunc::threshold_A(quadfunc::FormK(k)); },
        py::arg("k"));

    m.def(
        "recurrence_for",
        [](long long k, long long n) {
            auto inst = quadfunc::recurrence_for(quadfunc::FormK(k), n);
            py::dict out;
            out["case"] = quadfunc::to_string(inst.parity_case);
            out["l"] = inst.l;
            out["args"] = py::make_tuple(inst.args[0], inst.args[1], inst.args[2]);
            return out;
        },
        py::arg("k"), py::arg("n"));

    m.def(
        "audit_recurrences",
        [](long long k) {
            auto audit = quadfunc::audit_recurrences(quadfunc::FormK(k));
            py::dict out;
            out["k"] = audit.k;
            out["passed"] = audit.passed;
            py::list cases;
            for (const auto& c : audit.cases) {
                py::dict cj;
                cj["case"] = quadfunc::to_string(c.parity_case);
                cj["residual"] = c.residual.str("l");
                cj["l_min"] = c.l_min;
                cj["side_conditions_ok"] = c.side_conditions_ok;
                cj["spot_check_ok"] = c.spot_check_ok;
                cases.append(cj);
            }
            out["cases"] = cases;
            return out;
        },
        py::arg("k"));

    m.def(
        "certify",
        [](long long k, long long scan, int degree_cap) {
            const quadfunc::FormK form(k);
            const long long target = std::max(quadfunc::threshold_A(form) + 2, 4 * k + 4);
            quadfunc::SolveBudget budget;
            budget.derivation = {scan, degree_cap};
            auto derived = quadfunc::derive_expressions(form, target, budget.derivation);
            auto solution = quadfunc::solve_base(form, derived, budget);
            auto cert = quadfunc::certify(form, solution, derived);
            return json_to_py(quadfunc::certificate_payload(cert, solution));
        },
        py::arg("k"), py::arg("scan") = 2000, py::arg("degree_cap") = 8);

    py::register_exception<quadfunc::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<quadfunc::SideConditionError>(m, "SideConditionError", PyExc_ValueError);
    py::register_exception<quadfunc::DegreeError>(m, "DegreeError", PyExc_ValueError);
}
