#include "dunn/render.hpp"

#include <algorithm>
#include <sstream>

namespace dunn {

namespace {

std::string family_symbol(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::identity: return "id";
    case ClassicalFamily::negation: return "¬";
    case ClassicalFamily::conjunction: return "∧";
    case ClassicalFamily::disjunction: return "∨";
    case ClassicalFamily::implication: return "→";
    case ClassicalFamily::biconditional: return "↔";
  }
  return "?";
}

std::string pad(const std::string& s, std::size_t width) {
  // Width by code points, not bytes; the tables carry UTF-8 symbols.
  std::size_t length = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++length;
  }
  return s + std::string(length < width ? width - length : 0, ' ');
}

std::string join_args(std::span<const Interpretation> args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ',';
    out += args[i].to_string();
  }
  return out;
}

}  // namespace

std::string render_table(const TruthTable& table, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::machine) {
    out << "table symbol=" << table.symbol << " token=" << table.token
        << " arity=" << table.arity << "\n";
    if (table.arity == 1) {
      for (std::size_t i = 0; i < table.axis.size(); ++i) {
        out << "cell args=" << table.axis[i].to_string() << " value=" << table.cells[i].to_string()
            << "\n";
      }
    } else {
      for (std::size_t r = 0; r < table.axis.size(); ++r) {
        for (std::size_t c = 0; c < table.axis.size(); ++c) {
          out << "cell args=" << table.axis[r].to_string() << "," << table.axis[c].to_string()
              << " value=" << table.cells[r * table.axis.size() + c].to_string() << "\n";
        }
      }
    }
    return out.str();
  }

  constexpr std::size_t kColumn = 7;
  if (table.arity == 1) {
    out << pad(table.symbol + "A", kColumn) << "| A\n";
    out << std::string(kColumn, '-') << "+------\n";
    for (std::size_t i = 0; i < table.axis.size(); ++i) {
      out << pad(table.cells[i].to_string(), kColumn) << "| " << table.axis[i].to_string() << "\n";
    }
    return out.str();
  }

  out << pad("A " + table.symbol + " B", kColumn + 2) << "|";
  for (Interpretation v : table.axis) out << ' ' << pad(v.to_string(), kColumn);
  out << "\n" << std::string(kColumn + 2, '-') << "+" << std::string((kColumn + 1) * table.axis.size(), '-')
      << "\n";
  for (std::size_t r = 0; r < table.axis.size(); ++r) {
    out << pad(table.axis[r].to_string(), kColumn + 2) << "|";
    for (std::size_t c = 0; c < table.axis.size(); ++c) {
      out << ' ' << pad(table.cells[r * table.axis.size() + c].to_string(), kColumn);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_verdict(const Verdict& verdict, OutputFormat format) {
  if (format == OutputFormat::machine) {
    if (verdict.valid) return "verdict=valid\n";
    return "verdict=invalid\ncounterexample " + verdict.counterexample->to_string() + "\n";
  }
  if (verdict.valid) return "Valid\n";
  return "Invalid, counterexample " + verdict.counterexample->to_string() + "\n";
}

std::string render_comparison(const ValueComparison& cmp, OutputFormat format) {
  if (format == OutputFormat::machine) {
    if (cmp.same) return "verdict=same\n";
    return "verdict=different\nwitness " + cmp.witness->to_string() + "\nvalues left=" +
           cmp.lhs_value->to_string() + " right=" + cmp.rhs_value->to_string() + "\n";
  }
  if (cmp.same) return "Same value under every valuation\n";
  return "Different, witness " + cmp.witness->to_string() + " (values " +
         cmp.lhs_value->to_string() + " vs " + cmp.rhs_value->to_string() + ")\n";
}

std::string render_closure(const std::optional<ClosureViolation>& violation, OutputFormat format) {
  if (format == OutputFormat::machine) {
    if (!violation) return "closure=ok\n";
    return "closure=violation symbol=" + violation->symbol + " args=" + join_args(violation->args) +
           " result=" + violation->result.to_string() + "\n";
  }
  if (!violation) return "Closure holds\n";
  return "Closure violation: " + violation->to_string() + "\n";
}

std::string render_source_report(const SourceReport& report, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::machine) {
    for (const ConditionSource& e : report.entries) {
      out << "source connective=" << e.token << " condition=" << to_string(e.polarity);
      if (e.family) {
        out << " family=" << to_string(*e.family) << " profile=" << to_string(*e.profile);
      } else {
        out << " family=none profile=none";
      }
      out << " borrowed=" << (e.borrowed ? "true" : "false") << "\n";
    }
    return out.str();
  }
  out << "Classical sources of the evaluation conditions of " << report.logic_name << ":\n";
  for (const ConditionSource& e : report.entries) {
    out << "  " << to_string(e.polarity) << "(" << e.token << ") = ";
    if (e.family) {
      out << "classical " << to_string(*e.profile) << "(" << family_symbol(*e.family) << ")";
    } else {
      out << "no classical match";
    }
    if (e.borrowed) out << " [borrowed]";
    out << "\n";
  }
  return out.str();
}

std::string render_witnesses(const WitnessSearchResult& result, const LogicSpec& spec,
                             const WitnessSearchBounds& bounds, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::machine) {
    out << "bounds vars=" << bounds.max_vars << " depth=" << bounds.max_depth
        << " premises=" << bounds.max_premises << "\n";
    out << "count=" << result.witnesses.size() << "\n";
    out << "truncated=" << (result.truncated ? "true" : "false") << "\n";
    for (const Argument& w : result.witnesses) out << "witness=" << w.render(spec) << "\n";
    return out.str();
  }
  if (result.witnesses.empty()) {
    out << "no witnesses (bounds: " << bounds.to_string() << ")\n";
  } else {
    out << result.witnesses.size() << " witness(es) (bounds: " << bounds.to_string() << ")\n";
    for (const Argument& w : result.witnesses) out << "  " << w.render(spec) << "\n";
  }
  if (result.truncated) out << "search truncated by time budget\n";
  return out.str();
}

std::string render_negation_witnesses(const NegationInconsistencyResult& result,
                                      const LogicSpec& spec, const WitnessSearchBounds& bounds,
                                      OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::machine) {
    out << "bounds vars=" << bounds.max_vars << " depth=" << bounds.max_depth << "\n";
    out << "count=" << result.witnesses.size() << "\n";
    out << "truncated=" << (result.truncated ? "true" : "false") << "\n";
    for (const Formula& w : result.witnesses) out << "witness=" << spec.render(w) << "\n";
    return out.str();
  }
  if (result.witnesses.empty()) {
    out << "no witnesses (bounds: " << bounds.to_string() << ")\n";
  } else {
    out << result.witnesses.size() << " witness(es) (bounds: " << bounds.to_string() << ")\n";
    for (const Formula& w : result.witnesses) out << "  " << spec.render(w) << "\n";
  }
  if (result.truncated) out << "search truncated by time budget\n";
  return out.str();
}

std::string render_condition_diff(const LogicSpec& spec, OutputFormat format) {
  std::ostringstream out;
  for (const ConnectiveDef& def : spec.connectives()) {
    const ClassicalCatalogEntry& base = classical_catalog_entry(def.classical_counterpart);
    const ChangeKind truth_kind = classify_change(base.truth_condition, def.truth_condition);
    const ChangeKind falsity_kind = classify_change(base.falsity_condition, def.falsity_condition);
    if (format == OutputFormat::machine) {
      out << "diff connective=" << def.signature.token << " condition=truth baseline="
          << to_string(def.classical_counterpart) << " kind=" << to_string(truth_kind) << "\n";
      out << "diff connective=" << def.signature.token << " condition=falsity baseline="
          << to_string(def.classical_counterpart) << " kind=" << to_string(falsity_kind) << "\n";
    } else {
      out << "truth(" << def.signature.token << ") vs FDE " << to_string(def.classical_counterpart)
          << ": " << to_string(truth_kind) << "\n";
      out << "falsity(" << def.signature.token << ") vs FDE "
          << to_string(def.classical_counterpart) << ": " << to_string(falsity_kind) << "\n";
    }
  }
  return out.str();
}

}  // namespace dunn
