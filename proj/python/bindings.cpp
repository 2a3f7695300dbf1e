#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "swapdeon/cli.hpp"
#include "swapdeon/error.hpp"
#include "swapdeon/proofs.hpp"
#include "swapdeon/search.hpp"

namespace py = pybind11;
using namespace swapdeon;

namespace {

Logic select(const std::string& name, std::optional<int> n,
             const std::vector<std::string>& disable) {
  Logic l = get_logic(name, n);
  for (const auto& id : disable) {
    auto r = parse_restriction(id);
    if (!r) throw LogicError("unknown restriction: " + id);
    l = l.without(*r);
  }
  return l;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["verdict"] = verdict_name(v.kind);
  d["closure_size"] = v.closure_size;
  d["frames_explored"] = v.frames_explored;
  if (v.model) {
    d["world"] = v.model->frame.name(v.world);
    d["model"] = dump_model(*v.model);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Swap-structure semantics for deontic LFIs";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "SwapdeonError", PyExc_ValueError);

  m.def("render", [](const std::string& text, const std::string& logic,
                     std::optional<int> n, bool full) {
    return render(parse(text, get_logic(logic, n)),
                  full ? RenderMode::FullyParenthesized : RenderMode::Minimal);
  }, py::arg("text"), py::arg("logic") = "dmbc", py::arg("n") = py::none(),
        py::arg("full") = false);

  m.def("logics", [](int max_n) {
    std::vector<std::string> names;
    for (const Logic& l : registered_logics(max_n)) names.push_back(l.name());
    return names;
  }, py::arg("max_n") = 2);

  m.def("axioms", [](const std::string& logic, std::optional<int> n) {
    std::vector<std::pair<std::string, std::string>> out;
    const Logic l = get_logic(logic, n);
    for (const AxiomSchema& s : l.axioms()) {
      out.emplace_back(s.id, render(s.templ));
    }
    return out;
  }, py::arg("logic"), py::arg("n") = py::none());

  m.def("truth_table", [](const std::string& logic, const std::string& op,
                          std::optional<int> n) {
    auto parsed = parse_op(op);
    if (!parsed) throw LogicError("unknown operation: " + op);
    return get_logic(logic, n).algebra().truth_table(*parsed);
  }, py::arg("logic"), py::arg("op"), py::arg("n") = py::none());

  m.def("find_countermodel", [](const std::string& logic,
                                const std::vector<std::string>& premises,
                                const std::string& conclusion, std::optional<int> n,
                                int max_worlds, long timeout_ms,
                                const std::vector<std::string>& disable) {
    Logic l = select(logic, n, disable);
    std::vector<Formula> ps;
    for (const auto& p : premises) ps.push_back(parse(p, l));
    Formula c = parse(conclusion, l);
    SearchBounds b;
    b.max_worlds = max_worlds;
    b.time_budget = std::chrono::milliseconds(timeout_ms);
    Verdict v = [&] {
      py::gil_scoped_release release;
      return find_countermodel(l, ps, c, b);
    }();
    return verdict_dict(v);
  }, py::arg("logic"), py::arg("premises"), py::arg("conclusion"),
        py::arg("n") = py::none(), py::arg("max_worlds") = 2,
        py::arg("timeout_ms") = 10000,
        py::arg("disable") = std::vector<std::string>{});

  m.def("check_model", [](const std::string& json) {
    ValuationReport r = check_valuation(load_model(json));
    py::list violations;
    for (const Violation& v : r.violations) {
      py::dict d;
      d["world"] = v.world;
      d["formula"] = v.formula;
      d["rule"] = v.rule;
      d["expected"] = v.expected;
      d["actual"] = v.actual;
      violations.append(d);
    }
    return violations;
  }, py::arg("json"));

  m.def("verify_proof", [](const std::string& json) {
    ProofCheck c = verify_from_premises(load_proof(json));
    return py::make_tuple(c.ok(), c.step, c.reason);
  }, py::arg("json"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
