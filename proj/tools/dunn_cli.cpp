// dunn — a workbench for Dunn-style evaluation conditions: derive
// truth tables, check consequence by exhaustive enumeration, and
// analyze where contra-classicality comes from.
//
// Exit codes: 0 success/Valid/true, 1 Invalid/false, 2 usage or input error.
//
// Arguments are parsed by hand: connective tokens such as "->w" are
// legitimate positionals here, which rules out getopt-style libraries.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dunn/consequence.hpp"
#include "dunn/contraclassic.hpp"
#include "dunn/presets.hpp"
#include "dunn/render.hpp"
#include "dunn/specfile.hpp"

namespace {

using namespace dunn;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

constexpr std::string_view kUsage = R"(usage: dunn [global options] <command> [command options] [arguments]

global options:
  --logic <preset>      built-in logic (see `dunn presets`)
  --spec <file>         logic from a spec file (JSON); exactly one of --logic/--spec
  --format <fmt>        text (default) | machine-readable
  --help                this text

commands:
  presets                         list the built-in logics
  table <connective>              derived truth table (token or symbol)
  eval <formula> --assign p={1}   evaluate under an assignment (repeat --assign)
  entail "B1, B2 |- A"            consequence check
  taut <formula>                  logical-truth check
  equiv <formula> <formula>       same value under every valuation?
  closure                         is the admissible set closed?
  classify                        classical source of every condition
  diff-conditions                 change kind of every condition vs its counterpart
  contra [--bounds ...]           bounded contra-classical witness search
  neg-inconsistency [--negation <token>] [--bounds ...]
                                  bounded search for A with A, neg(A) both valid

  --bounds vars=V,depth=D,premises=P,budget=S   (defaults 2,2,2,120; budget in seconds)

exit codes: 0 = success/Valid/true, 1 = Invalid/false, 2 = usage or input error
)";

struct CommandLine {
  std::string command;
  std::vector<std::string> positionals;
  std::string logic;
  std::string spec_file;
  std::string format = "text";
  std::vector<std::string> assigns;
  std::string bounds_text;
  std::string negation;
  bool help = false;
};

CommandLine parse_command_line(int argc, char** argv) {
  CommandLine cl;
  auto value_of = [&](int& i, std::string_view flag) {
    if (i + 1 >= argc) throw SpecError(std::string(flag) + " needs a value");
    return std::string(argv[++i]);
  };
  for (int i = 1; i < argc; ++i) {
    std::string_view arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      cl.help = true;
    } else if (arg == "--logic") {
      cl.logic = value_of(i, arg);
    } else if (arg == "--spec") {
      cl.spec_file = value_of(i, arg);
    } else if (arg == "--format") {
      cl.format = value_of(i, arg);
    } else if (arg == "--assign") {
      cl.assigns.push_back(value_of(i, arg));
    } else if (arg == "--bounds") {
      cl.bounds_text = value_of(i, arg);
    } else if (arg == "--negation") {
      cl.negation = value_of(i, arg);
    } else if (arg.starts_with("--") && cl.command.empty()) {
      throw SpecError("unknown option '" + std::string(arg) + "'");
    } else if (cl.command.empty()) {
      cl.command = std::string(arg);
    } else {
      cl.positionals.push_back(std::string(arg));
    }
  }
  return cl;
}

OutputFormat output_format(const CommandLine& cl) {
  if (cl.format == "text") return OutputFormat::text;
  if (cl.format == "machine-readable") return OutputFormat::machine;
  throw SpecError("unknown --format '" + cl.format + "' (expected text or machine-readable)");
}

// The closure command loads without the closure requirement so it can
// report the violation itself; everything else insists on closed specs.
LogicSpec resolve_logic(const CommandLine& cl, bool check_closure = true) {
  if (!cl.logic.empty() && !cl.spec_file.empty()) {
    throw SpecError("give exactly one logic source: --logic or --spec");
  }
  if (!cl.logic.empty()) return get_preset(cl.logic);
  if (!cl.spec_file.empty()) {
    SpecDocument doc = SpecDocument::load_file(cl.spec_file);
    return check_closure ? load_spec(doc) : load_spec_unchecked(doc);
  }
  throw SpecError("no logic selected; use --logic <preset> or --spec <file>");
}

WitnessSearchBounds parse_bounds(const std::string& text) {
  WitnessSearchBounds bounds;  // defaults: vars=2, depth=2, premises=2, budget 120 s
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = piece.find('=');
    if (eq == std::string::npos) throw SpecError("bad --bounds entry '" + piece + "'");
    std::string key = piece.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(piece.substr(eq + 1));
    } catch (const std::exception&) {
      throw SpecError("bad --bounds value in '" + piece + "'");
    }
    if (key == "vars") {
      bounds.max_vars = value;
    } else if (key == "depth") {
      bounds.max_depth = value;
    } else if (key == "premises") {
      bounds.max_premises = value;
    } else if (key == "budget") {
      bounds.time_budget = std::chrono::seconds(value);
    } else {
      throw SpecError("unknown --bounds key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return bounds;
}

Valuation parse_assignments(const std::vector<std::string>& assigns, const LogicSpec& spec) {
  Valuation v;
  for (const std::string& a : assigns) {
    std::size_t eq = a.find('=');
    if (eq == std::string::npos) {
      throw SpecError("bad --assign '" + a + "' (expected var=INTERPRETATION)");
    }
    std::string var = a.substr(0, eq);
    if (!is_valid_atom_name(var)) throw SpecError("bad variable name '" + var + "' in --assign");
    auto value = Interpretation::parse(a.substr(eq + 1));
    if (!value) throw SpecError("bad interpretation in --assign '" + a + "'");
    if (!spec.admits(*value)) {
      throw SpecError("interpretation " + value->to_string() + " is not admissible in " +
                      spec.name());
    }
    v.assign(var, *value);
  }
  return v;
}

const std::string& positional(const CommandLine& cl, std::size_t index, std::string_view what) {
  if (index >= cl.positionals.size()) {
    throw SpecError("missing argument: " + std::string(what));
  }
  return cl.positionals[index];
}

void reject_extra_positionals(const CommandLine& cl, std::size_t expected) {
  if (cl.positionals.size() > expected) {
    throw SpecError("unexpected argument '" + cl.positionals[expected] + "'");
  }
}

int dispatch(const CommandLine& cl) {
  const OutputFormat format = output_format(cl);

  if (cl.command == "presets") {
    reject_extra_positionals(cl, 0);
    for (PresetId id : all_presets()) {
      const LogicSpec& spec = get_preset(id);
      std::cout << preset_name(id) << ":";
      for (const ConnectiveDef& def : spec.connectives()) {
        std::cout << " " << def.signature.token;
      }
      std::cout << "\n";
    }
    return kExitTrue;
  }

  if (cl.command == "closure") {
    reject_extra_positionals(cl, 0);
    const LogicSpec spec = resolve_logic(cl, /*check_closure=*/false);
    std::optional<ClosureViolation> violation = closure_check(spec);
    std::cout << render_closure(violation, format);
    return violation ? kExitFalse : kExitTrue;
  }

  const LogicSpec spec = resolve_logic(cl);

  if (cl.command == "table") {
    reject_extra_positionals(cl, 1);
    std::cout << render_table(truth_table(positional(cl, 0, "connective"), spec), format);
    return kExitTrue;
  }
  if (cl.command == "eval") {
    reject_extra_positionals(cl, 1);
    Formula f = spec.parse(positional(cl, 0, "formula"));
    Interpretation result = evaluate(f, parse_assignments(cl.assigns, spec), spec);
    if (format == OutputFormat::machine) {
      std::cout << "value=" << result.to_string() << "\n";
    } else {
      std::cout << result.to_string() << "\n";
    }
    return kExitTrue;
  }
  if (cl.command == "entail") {
    reject_extra_positionals(cl, 1);
    Verdict verdict = entails(Argument::parse(positional(cl, 0, "argument"), spec), spec);
    std::cout << render_verdict(verdict, format);
    return verdict.valid ? kExitTrue : kExitFalse;
  }
  if (cl.command == "taut") {
    reject_extra_positionals(cl, 1);
    Verdict verdict = is_logical_truth(spec.parse(positional(cl, 0, "formula")), spec);
    std::cout << render_verdict(verdict, format);
    return verdict.valid ? kExitTrue : kExitFalse;
  }
  if (cl.command == "equiv") {
    reject_extra_positionals(cl, 2);
    ValueComparison cmp = same_value(spec.parse(positional(cl, 0, "first formula")),
                                     spec.parse(positional(cl, 1, "second formula")), spec);
    std::cout << render_comparison(cmp, format);
    return cmp.same ? kExitTrue : kExitFalse;
  }
  if (cl.command == "classify") {
    reject_extra_positionals(cl, 0);
    std::cout << render_source_report(source_classification(spec), format);
    return kExitTrue;
  }
  if (cl.command == "diff-conditions") {
    reject_extra_positionals(cl, 0);
    std::cout << render_condition_diff(spec, format);
    return kExitTrue;
  }
  if (cl.command == "contra") {
    reject_extra_positionals(cl, 0);
    WitnessSearchBounds bounds = parse_bounds(cl.bounds_text);
    WitnessSearchResult result = find_contra_witnesses(spec, bounds);
    std::cout << render_witnesses(result, spec, bounds, format);
    return result.witnesses.empty() ? kExitFalse : kExitTrue;
  }
  if (cl.command == "neg-inconsistency") {
    reject_extra_positionals(cl, 0);
    WitnessSearchBounds bounds = parse_bounds(cl.bounds_text);
    std::string negation = cl.negation;
    if (negation.empty()) {
      for (const ConnectiveDef& def : spec.connectives()) {
        if (def.signature.arity == 1) {
          if (!negation.empty()) {
            throw SpecError("several unary connectives in " + spec.name() +
                            "; pick one with --negation");
          }
          negation = def.signature.token;
        }
      }
      if (negation.empty()) throw SpecError("no unary connective in " + spec.name());
    }
    NegationInconsistencyResult result = negation_inconsistency_witnesses(spec, negation, bounds);
    std::cout << render_negation_witnesses(result, spec, bounds, format);
    return result.witnesses.empty() ? kExitFalse : kExitTrue;
  }

  throw SpecError("unknown command '" + cl.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    CommandLine cl = parse_command_line(argc, argv);
    if (cl.help || cl.command.empty()) {
      std::cout << kUsage;
      return cl.help ? kExitTrue : kExitError;
    }
    return dispatch(cl);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
