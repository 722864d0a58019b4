#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dunn/consequence.hpp"
#include "dunn/contraclassic.hpp"
#include "dunn/presets.hpp"
#include "dunn/render.hpp"
#include "dunn/specfile.hpp"

namespace py = pybind11;
using namespace dunn;

namespace {

py::object counterexample_dict(const std::optional<Valuation>& v) {
  if (!v) return py::none();
  py::dict out;
  for (std::size_t i = 0; i < v->variables().size(); ++i) {
    out[py::str(v->variables()[i])] = v->values()[i].to_string();
  }
  return out;
}

Valuation valuation_from_dict(const py::dict& assignment, const LogicSpec& spec) {
  Valuation v;
  for (auto item : assignment) {
    std::string var = py::cast<std::string>(item.first);
    std::string text = py::cast<std::string>(item.second);
    auto value = Interpretation::parse(text);
    if (!value) throw SpecError("bad interpretation '" + text + "' for variable " + var);
    if (!spec.admits(*value)) {
      throw SpecError("interpretation " + value->to_string() + " is not admissible in " + spec.name());
    }
    v.assign(var, *value);
  }
  return v;
}

WitnessSearchBounds bounds_from_kwargs(int vars, int depth, int premises, int budget_ms) {
  WitnessSearchBounds b;
  b.max_vars = vars;
  b.max_depth = depth;
  b.max_premises = premises;
  b.time_budget = std::chrono::milliseconds(budget_ms);
  return b;
}

}  // namespace

PYBIND11_MODULE(pydunn, m) {
  m.doc() = "Four-valued evaluation conditions, consequence checking and "
            "contra-classicality analysis";

  py::register_exception<Error>(m, "DunnError");

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("valid", &Verdict::valid)
      .def_property_readonly("counterexample",
                             [](const Verdict& v) { return counterexample_dict(v.counterexample); })
      .def("__bool__", [](const Verdict& v) { return v.valid; })
      .def("__repr__", [](const Verdict& v) {
        if (v.valid) return std::string("Verdict(valid)");
        return "Verdict(invalid, " + v.counterexample->to_string() + ")";
      });

  py::class_<ValueComparison>(m, "ValueComparison")
      .def_readonly("same", &ValueComparison::same)
      .def_property_readonly("witness",
                             [](const ValueComparison& c) { return counterexample_dict(c.witness); })
      .def_property_readonly("values",
                             [](const ValueComparison& c) -> py::object {
                               if (c.same) return py::none();
                               return py::make_tuple(c.lhs_value->to_string(),
                                                     c.rhs_value->to_string());
                             })
      .def("__bool__", [](const ValueComparison& c) { return c.same; });

  py::class_<LogicSpec>(m, "LogicSpec")
      .def_property_readonly("name", &LogicSpec::name)
      .def_property_readonly("admissible",
                             [](const LogicSpec& spec) {
                               std::vector<std::string> out;
                               for (Interpretation v : spec.admissible()) out.push_back(v.to_string());
                               return out;
                             })
      .def_property_readonly("connectives",
                             [](const LogicSpec& spec) {
                               py::list out;
                               for (const ConnectiveDef& def : spec.connectives()) {
                                 py::dict d;
                                 d["symbol"] = def.signature.symbol;
                                 d["token"] = def.signature.token;
                                 d["arity"] = def.signature.arity;
                                 d["precedence"] = def.signature.precedence;
                                 d["truth"] = def.truth_condition.to_string();
                                 d["falsity"] = def.falsity_condition.to_string();
                                 d["classical_counterpart"] =
                                     std::string(to_string(def.classical_counterpart));
                                 out.append(std::move(d));
                               }
                               return out;
                             })
      .def("parse",
           [](const LogicSpec& spec, const std::string& text) { return spec.render(spec.parse(text)); },
           py::arg("text"),
           "Parse a formula and return its canonical rendering")
      .def("evaluate",
           [](const LogicSpec& spec, const std::string& formula, const py::dict& assignment) {
             return evaluate(spec.parse(formula), valuation_from_dict(assignment, spec), spec)
                 .to_string();
           },
           py::arg("formula"), py::arg("assignment"))
      .def("truth_table",
           [](const LogicSpec& spec, const std::string& connective) {
             TruthTable t = truth_table(connective, spec);
             py::dict out;
             out["symbol"] = t.symbol;
             out["token"] = t.token;
             out["arity"] = t.arity;
             std::vector<std::string> axis, cells;
             for (Interpretation v : t.axis) axis.push_back(v.to_string());
             for (Interpretation v : t.cells) cells.push_back(v.to_string());
             out["axis"] = axis;
             out["cells"] = cells;
             return out;
           },
           py::arg("connective"))
      .def("entails",
           [](const LogicSpec& spec, const std::string& argument) {
             return entails(Argument::parse(argument, spec), spec);
           },
           py::arg("argument"), "Check an argument \"B1, B2 |- A\"")
      .def("is_logical_truth",
           [](const LogicSpec& spec, const std::string& formula) {
             return is_logical_truth(spec.parse(formula), spec);
           },
           py::arg("formula"))
      .def("same_value",
           [](const LogicSpec& spec, const std::string& lhs, const std::string& rhs) {
             return same_value(spec.parse(lhs), spec.parse(rhs), spec);
           },
           py::arg("lhs"), py::arg("rhs"))
      .def("closure_violation",
           [](const LogicSpec& spec) -> py::object {
             auto violation = closure_check(spec);
             if (!violation) return py::none();
             return py::str(violation->to_string());
           })
      .def("__repr__", [](const LogicSpec& spec) { return "LogicSpec(" + spec.name() + ")"; });

  m.def("presets", [] {
    std::vector<std::string> out;
    for (PresetId id : all_presets()) out.emplace_back(preset_name(id));
    return out;
  });
  m.def("preset", [](const std::string& name) { return get_preset(name); }, py::arg("name"));

  m.def("load_spec",
        [](const std::string& json_text) { return load_spec(SpecDocument::from_json_text(json_text)); },
        py::arg("json_text"), "Build a logic from a spec document (JSON text)");
  m.def("save_spec",
        [](const LogicSpec& spec) { return save_spec(spec).to_json_text(); },
        py::arg("spec"), "Serialize a logic to spec-document JSON text");

  m.def("classical_benchmark", [](const LogicSpec& spec) { return classical_benchmark(spec); },
        py::arg("spec"));

  m.def("is_contra_classical_witness",
        [](const LogicSpec& spec, const std::string& argument) {
          return is_contra_classical_witness(Argument::parse(argument, spec), spec);
        },
        py::arg("spec"), py::arg("argument"));

  m.def("source_classification",
        [](const LogicSpec& spec) {
          py::list out;
          for (const ConditionSource& e : source_classification(spec).entries) {
            py::dict d;
            d["symbol"] = e.symbol;
            d["token"] = e.token;
            d["condition"] = std::string(to_string(e.polarity));
            d["family"] = e.family ? py::cast(std::string(to_string(*e.family))) : py::none();
            d["profile"] = e.profile ? py::cast(std::string(to_string(*e.profile))) : py::none();
            d["borrowed"] = e.borrowed;
            out.append(std::move(d));
          }
          return out;
        },
        py::arg("spec"));

  m.def("find_contra_witnesses",
        [](const LogicSpec& spec, int vars, int depth, int premises, int budget_ms) {
          WitnessSearchResult result =
              find_contra_witnesses(spec, bounds_from_kwargs(vars, depth, premises, budget_ms));
          py::dict out;
          std::vector<std::string> witnesses;
          for (const Argument& w : result.witnesses) witnesses.push_back(w.render(spec));
          out["witnesses"] = witnesses;
          out["truncated"] = result.truncated;
          return out;
        },
        py::arg("spec"), py::arg("vars") = 2, py::arg("depth") = 2, py::arg("premises") = 2,
        py::arg("budget_ms") = 120000);

  m.def("negation_inconsistency_witnesses",
        [](const LogicSpec& spec, const std::string& negation, int vars, int depth, int budget_ms) {
          NegationInconsistencyResult result = negation_inconsistency_witnesses(
              spec, negation, bounds_from_kwargs(vars, depth, 0, budget_ms));
          py::dict out;
          std::vector<std::string> witnesses;
          for (const Formula& w : result.witnesses) witnesses.push_back(spec.render(w));
          out["witnesses"] = witnesses;
          out["truncated"] = result.truncated;
          return out;
        },
        py::arg("spec"), py::arg("negation"), py::arg("vars") = 1, py::arg("depth") = 3,
        py::arg("budget_ms") = 120000);

  m.def("classify_change",
        [](const std::string& from, const std::string& to) {
          return std::string(
              to_string(classify_change(ConditionExpr::parse(from), ConditionExpr::parse(to))));
        },
        py::arg("from_condition"), py::arg("to_condition"));
  m.def("is_tweaking",
        [](const std::string& from, const std::string& to) {
          return is_tweaking(ConditionExpr::parse(from), ConditionExpr::parse(to));
        },
        py::arg("from_condition"), py::arg("to_condition"));
}
