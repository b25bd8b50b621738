#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilrep/cli.hpp"
#include "nilrep/criterion.hpp"
#include "nilrep/schrodinger.hpp"

namespace py = pybind11;
using namespace nilrep;

namespace {

Functional functional_of(const LieAlgebra& algebra, const std::optional<std::map<std::string, std::string>>& values) {
    if (!values) return Functional::generic(algebra);
    std::map<std::string, Rational> parsed;
    for (const auto& [name, text] : *values) parsed[name] = parse_rational(text);
    return Functional::from_named_values(algebra, parsed);
}

RepParams params_of(const std::string& kind, const std::vector<std::string>& p) {
    std::vector<Rational> q;
    for (const auto& s : p) q.push_back(parse_rational(s));
    if (kind == "heisenberg" && q.size() == 1) return Heisenberg{q[0]};
    if (kind == "free32" && q.size() == 4) return Free32{q[0], q[1], q[2], q[3]};
    throw std::invalid_argument("expected heisenberg with 1 parameter or free32 with 4, got " + kind + " with " +
                                std::to_string(q.size()));
}

GroupWord word_of(const std::vector<std::pair<std::string, std::string>>& w) {
    static const std::map<std::string, Element> names = {{"X1", Element::X1}, {"X2", Element::X2},
                                                         {"X3", Element::X3}, {"Z1", Element::Z1},
                                                         {"Z2", Element::Z2}, {"Z3", Element::Z3}};
    GroupWord out;
    for (const auto& [name, x] : w) {
        const auto it = names.find(name);
        if (it == names.end()) throw std::invalid_argument("unknown element: " + name);
        out.push_back({it->second, parse_rational(x)});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_nilrep, mod) {
    mod.doc() = "Exact irreducibility test for free step-two nilpotent Lie algebras";

    py::register_exception<GridError>(mod, "GridError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(mod, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<DegenerateError>(mod, "DegenerateError", PyExc_ValueError);

    mod.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a CLI subcommand in process; returns (exit_code, stdout, stderr).");

    mod.def("construct_json", [](int m) { return lie_algebra_json(construct_free2(m)); }, py::arg("m"));

    mod.def("stabilizer_json", [](int m, std::optional<std::map<std::string, std::string>> values) {
        const auto L = construct_free2(m);
        return nilrep::stabilizer_json(stabilizer(L, functional_of(L, values)));
    }, py::arg("m"), py::arg("values") = py::none());

    mod.def("criterion_json", [](int m, std::optional<std::map<std::string, std::string>> values, bool require_generic) {
        const auto L = construct_free2(m);
        return format_report_json(check_irreducible(L, functional_of(L, values), {require_generic, nullptr}));
    }, py::arg("m"), py::arg("values") = py::none(), py::arg("require_generic") = false);

    mod.def("sweep_json", [](int from, int to) { return format_sweep_json(theorem_sweep(from, to)); },
            py::arg("m_from"), py::arg("m_to"));

    mod.def("pfaffian", [](int m, std::optional<std::map<std::string, std::string>> values) {
        const auto L = construct_free2(m);
        return omega_polynomial(L, functional_of(L, values)).to_string();
    }, py::arg("m"), py::arg("values") = py::none(), "Omega polynomial of M(lambda) as a string.");

    mod.def("m5_closed_forms", []() {
        const auto r = check_m5_closed_forms();
        py::list alphas;
        for (const auto& a : r.alphas) {
            py::dict d;
            d["k"] = a.k;
            d["computed"] = a.computed;
            d["reference"] = a.reference;
            d["match"] = a.match;
            alphas.append(d);
        }
        py::dict out;
        out["alphas"] = alphas;
        out["reference_in_kernel"] = r.reference_in_kernel;
        out["matched"] = r.matched();
        return out;
    });

    mod.def("apply_rep", [](const std::string& kind, const std::vector<std::string>& params, int n,
                            const std::string& period, const std::vector<std::pair<std::string, std::string>>& word,
                            const CVector& f, bool inverse) {
        const auto p = params_of(kind, params);
        validate(p);
        const Grid grid(n, parse_rational(period));
        const auto w = word_of(word);
        return inverse ? apply_rep_inverse(p, grid, w, f) : apply_rep(p, grid, w, f);
    }, py::arg("kind"), py::arg("params"), py::arg("n"), py::arg("period"), py::arg("word"), py::arg("f"),
            py::arg("inverse") = false);

    mod.def("commutator_phase", [](const std::string& kind, const std::vector<std::string>& params, int n,
                                   const std::string& period, const std::vector<std::pair<std::string, std::string>>& a,
                                   const std::vector<std::pair<std::string, std::string>>& b, const CVector& f) {
        const auto p = params_of(kind, params);
        validate(p);
        return commutator_phase(p, Grid(n, parse_rational(period)), word_of(a), word_of(b), f);
    }, py::arg("kind"), py::arg("params"), py::arg("n"), py::arg("period"), py::arg("a"), py::arg("b"), py::arg("f"));

    mod.def("rep_checks", [](std::uint64_t seed) {
        py::list out;
        for (const auto& c : standard_rep_checks(seed)) {
            py::dict d;
            d["name"] = c.name;
            d["config"] = c.config;
            d["max_err"] = c.max_err;
            d["pass"] = c.pass;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = 20240531);
}
