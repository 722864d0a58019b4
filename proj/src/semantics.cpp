#include "dunn/semantics.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dunn {

std::string_view to_string(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::identity: return "identity";
    case ClassicalFamily::negation: return "negation";
    case ClassicalFamily::conjunction: return "conjunction";
    case ClassicalFamily::disjunction: return "disjunction";
    case ClassicalFamily::implication: return "implication";
    case ClassicalFamily::biconditional: return "biconditional";
  }
  return "?";
}

std::optional<ClassicalFamily> classical_family_from_name(std::string_view name) {
  if (name == "identity") return ClassicalFamily::identity;
  if (name == "negation") return ClassicalFamily::negation;
  if (name == "conjunction") return ClassicalFamily::conjunction;
  if (name == "disjunction") return ClassicalFamily::disjunction;
  if (name == "implication") return ClassicalFamily::implication;
  if (name == "biconditional") return ClassicalFamily::biconditional;
  return std::nullopt;
}

int classical_family_arity(ClassicalFamily f) {
  return (f == ClassicalFamily::identity || f == ClassicalFamily::negation) ? 1 : 2;
}

// ---------------------------------------------------------------------------
// Valuation

Valuation::Valuation(std::vector<std::string> sorted_vars)
    : vars_(std::move(sorted_vars)), values_(vars_.size(), Interpretation::just_true()) {}

static std::size_t find_var(const std::vector<std::string>& vars, std::string_view var) {
  auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var) return vars.size();
  return static_cast<std::size_t>(it - vars.begin());
}

void Valuation::assign(std::string_view var, Interpretation value) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  const std::ptrdiff_t pos = it - vars_.begin();
  if (it != vars_.end() && *it == var) {
    values_[static_cast<std::size_t>(pos)] = value;
    return;
  }
  vars_.insert(it, std::string(var));
  values_.insert(values_.begin() + pos, value);
}

Interpretation Valuation::value(std::string_view var) const {
  std::size_t i = find_var(vars_, var);
  if (i == vars_.size()) throw EvalError("unbound variable '" + std::string(var) + "'");
  return values_[i];
}

bool Valuation::bound(std::string_view var) const { return find_var(vars_, var) != vars_.size(); }

Valuation Valuation::from_pairs(std::vector<std::pair<std::string, Interpretation>> pairs) {
  Valuation v;
  for (auto& [var, value] : pairs) v.assign(var, value);
  return v;
}

std::string Valuation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i > 0) out += ' ';
    out += vars_[i];
    out += '=';
    out += values_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// LogicSpec

std::string ClosureViolation::to_string() const {
  std::string out = symbol + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += args[i].to_string();
  }
  out += ") = " + result.to_string() + " is not admissible";
  return out;
}

namespace {

bool forbidden_token(std::string_view token) {
  if (token.empty()) return true;
  if (is_valid_atom_name(token)) return true;  // would shadow atoms
  for (const BiconditionalMacro& macro : biconditional_macros()) {
    if (token == macro.token) return true;  // reserved
  }
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',') return true;
  }
  if (token.find("|-") != std::string_view::npos) return true;  // turnstile
  return false;
}

}  // namespace

LogicSpec::LogicSpec(std::string name, std::vector<ConnectiveDef> connectives,
                     std::vector<Interpretation> admissible)
    : name_(std::move(name)), connectives_(std::move(connectives)) {
  if (admissible.empty()) throw SpecError("admissible interpretation set must be non-empty");
  std::sort(admissible.begin(), admissible.end());
  admissible.erase(std::unique(admissible.begin(), admissible.end()), admissible.end());
  admissible_ = std::move(admissible);

  std::set<std::string> tokens, symbols;
  for (const ConnectiveDef& def : connectives_) {
    const ConnectiveSignature& sig = def.signature;
    if (sig.arity != 1 && sig.arity != 2) {
      throw SpecError("connective '" + sig.symbol + "': arity must be 1 or 2");
    }
    if (forbidden_token(sig.token)) {
      throw SpecError("connective '" + sig.symbol + "': token '" + sig.token +
                      "' is empty, reserved, or clashes with atom/argument syntax");
    }
    if (sig.symbol.empty()) throw SpecError("connective with empty symbol");
    if (!tokens.insert(sig.token).second) {
      throw SpecError("duplicate connective token '" + sig.token + "'");
    }
    if (!symbols.insert(sig.symbol).second) {
      throw SpecError("duplicate connective symbol '" + sig.symbol + "'");
    }
    if (sig.precedence < 0 || sig.precedence > 1000) {
      throw SpecError("connective '" + sig.symbol + "': precedence out of range [0, 1000]");
    }
    if (def.truth_condition.max_arg() > sig.arity || def.falsity_condition.max_arg() > sig.arity) {
      throw SpecError("connective '" + sig.symbol +
                      "': condition refers to an argument beyond its arity");
    }
    if (classical_family_arity(def.classical_counterpart) != sig.arity) {
      throw SpecError("connective '" + sig.symbol + "': classical counterpart " +
                      std::string(to_string(def.classical_counterpart)) + " has the wrong arity");
    }
    signatures_.push_back(sig);
  }

  // Precompute the tables over the full four-interpretation domain.
  for (const ConnectiveDef& def : connectives_) {
    const int arity = def.signature.arity;
    std::vector<Interpretation> table;
    std::vector<Interpretation> args(static_cast<std::size_t>(arity));
    const int rows = arity == 1 ? 4 : 16;
    table.reserve(static_cast<std::size_t>(rows));
    for (int idx = 0; idx < rows; ++idx) {
      if (arity == 1) {
        args[0] = Interpretation::from_canonical_index(idx);
      } else {
        args[0] = Interpretation::from_canonical_index(idx / 4);
        args[1] = Interpretation::from_canonical_index(idx % 4);
      }
      table.push_back(Interpretation::from_flags(eval_condition(def.truth_condition, args),
                                                 eval_condition(def.falsity_condition, args)));
    }
    tables_.push_back(std::move(table));
  }

  // Closure status, cached for the lifetime of the (immutable) spec.
  for (std::size_t ci = 0; ci < connectives_.size() && !closure_violation_; ++ci) {
    const int arity = connectives_[ci].signature.arity;
    std::vector<Interpretation> args(static_cast<std::size_t>(arity));
    auto check = [&](std::span<const Interpretation> tuple) {
      Interpretation result =
          arity == 1 ? tables_[ci][static_cast<std::size_t>(tuple[0].canonical_index())]
                     : tables_[ci][static_cast<std::size_t>(tuple[0].canonical_index() * 4 +
                                                            tuple[1].canonical_index())];
      if (!admits(result)) {
        closure_violation_ = ClosureViolation{connectives_[ci].signature.symbol,
                                              {tuple.begin(), tuple.end()}, result};
        return false;
      }
      return true;
    };
    if (arity == 1) {
      for (Interpretation a : admissible_) {
        args[0] = a;
        if (!check(args)) break;
      }
    } else {
      for (Interpretation a : admissible_) {
        args[0] = a;
        bool stop = false;
        for (Interpretation b : admissible_) {
          args[1] = b;
          if (!check(args)) {
            stop = true;
            break;
          }
        }
        if (stop) break;
      }
    }
  }
}

bool LogicSpec::admits(Interpretation v) const {
  return std::find(admissible_.begin(), admissible_.end(), v) != admissible_.end();
}

const ConnectiveDef* LogicSpec::find_symbol(std::string_view symbol) const {
  for (const ConnectiveDef& def : connectives_) {
    if (def.signature.symbol == symbol) return &def;
  }
  return nullptr;
}

const ConnectiveDef* LogicSpec::find_token(std::string_view token) const {
  for (const ConnectiveDef& def : connectives_) {
    if (def.signature.token == token) return &def;
  }
  return nullptr;
}

const ConnectiveDef& LogicSpec::require_connective(std::string_view token_or_symbol) const {
  if (const ConnectiveDef* def = find_token(token_or_symbol)) return *def;
  if (const ConnectiveDef* def = find_symbol(token_or_symbol)) return *def;
  throw EvalError("unknown connective '" + std::string(token_or_symbol) + "' in logic " + name_);
}

std::span<const Interpretation> LogicSpec::full_table(std::size_t connective_index) const {
  return tables_[connective_index];
}

std::size_t LogicSpec::connective_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < connectives_.size(); ++i) {
    if (connectives_[i].signature.symbol == symbol) return i;
  }
  throw EvalError("unknown connective symbol '" + std::string(symbol) + "' in logic " + name_);
}

std::optional<ClosureViolation> closure_check(const LogicSpec& spec) {
  return spec.closure_violation_;
}

void require_closure(const LogicSpec& spec) {
  if (auto violation = closure_check(spec)) {
    throw SpecError("logic " + spec.name() + " fails its closure check: " + violation->to_string());
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Interpretation evaluate_impl(const Formula& f, const Valuation& v, const LogicSpec& spec) {
  if (f.is_atom()) return v.value(f.atom_name());
  const std::size_t ci = spec.connective_index(f.symbol());
  const ConnectiveDef& def = spec.connectives()[ci];
  if (static_cast<int>(f.args().size()) != def.signature.arity) {
    throw EvalError("connective '" + f.symbol() + "' applied to " +
                    std::to_string(f.args().size()) + " argument(s), arity is " +
                    std::to_string(def.signature.arity));
  }
  std::span<const Interpretation> table = spec.full_table(ci);
  if (def.signature.arity == 1) {
    Interpretation a = evaluate_impl(f.args()[0], v, spec);
    return table[static_cast<std::size_t>(a.canonical_index())];
  }
  Interpretation a = evaluate_impl(f.args()[0], v, spec);
  Interpretation b = evaluate_impl(f.args()[1], v, spec);
  return table[static_cast<std::size_t>(a.canonical_index() * 4 + b.canonical_index())];
}

}  // namespace

Interpretation evaluate(const Formula& f, const Valuation& v, const LogicSpec& spec) {
  require_closure(spec);
  return evaluate_impl(f, v, spec);
}

// ---------------------------------------------------------------------------
// Truth tables

Interpretation TruthTable::cell(std::span<const Interpretation> args) const {
  auto axis_index = [&](Interpretation v) {
    for (std::size_t i = 0; i < axis.size(); ++i) {
      if (axis[i] == v) return i;
    }
    throw EvalError("interpretation " + v.to_string() + " is not on the table axis");
  };
  if (arity == 1) return cells[axis_index(args[0])];
  return cells[axis_index(args[0]) * axis.size() + axis_index(args[1])];
}

TruthTable truth_table(std::string_view token_or_symbol, const LogicSpec& spec) {
  const ConnectiveDef& def = spec.require_connective(token_or_symbol);
  const std::size_t ci = spec.connective_index(def.signature.symbol);
  std::span<const Interpretation> full = spec.full_table(ci);

  TruthTable t;
  t.symbol = def.signature.symbol;
  t.token = def.signature.token;
  t.arity = def.signature.arity;
  t.axis = spec.admissible();
  if (t.arity == 1) {
    for (Interpretation a : t.axis) {
      t.cells.push_back(full[static_cast<std::size_t>(a.canonical_index())]);
    }
  } else {
    for (Interpretation a : t.axis) {
      for (Interpretation b : t.axis) {
        t.cells.push_back(full[static_cast<std::size_t>(a.canonical_index() * 4 + b.canonical_index())]);
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Valuation enumeration

ValuationEnumerator::ValuationEnumerator(std::vector<std::string> vars,
                                         std::vector<Interpretation> admissible)
    : vars_(std::move(vars)), admissible_(std::move(admissible)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  std::sort(admissible_.begin(), admissible_.end());
  admissible_.erase(std::unique(admissible_.begin(), admissible_.end()), admissible_.end());
  if (admissible_.empty()) throw SpecError("cannot enumerate valuations over an empty admissible set");
  digits_.assign(vars_.size(), 0);
}

std::uint64_t ValuationEnumerator::count() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < vars_.size(); ++i) n *= admissible_.size();
  return n;
}

bool ValuationEnumerator::next(Valuation& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
  } else {
    // Advance like an odometer, least significant digit last.
    std::size_t i = digits_.size();
    while (i > 0) {
      --i;
      if (++digits_[i] < admissible_.size()) break;
      digits_[i] = 0;
      if (i == 0) {
        done_ = true;
        return false;
      }
    }
    if (digits_.empty()) {
      done_ = true;
      return false;
    }
  }
  out = Valuation(vars_);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    out.value_at(i) = admissible_[digits_[i]];
  }
  return true;
}

void ValuationEnumerator::reset() {
  std::fill(digits_.begin(), digits_.end(), 0);
  done_ = false;
  first_ = true;
}

std::vector<Valuation> enumerate_valuations(std::vector<std::string> vars,
                                            std::vector<Interpretation> admissible) {
  ValuationEnumerator e(std::move(vars), std::move(admissible));
  std::vector<Valuation> out;
  Valuation v;
  while (e.next(v)) out.push_back(v);
  return out;
}

}  // namespace dunn
