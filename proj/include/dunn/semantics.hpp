#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunn/conditions.hpp"
#include "dunn/formula.hpp"
#include "dunn/interpretation.hpp"

namespace dunn {

/// The classical connective families a condition can be measured against.
enum class ClassicalFamily { identity, negation, conjunction, disjunction, implication, biconditional };

std::string_view to_string(ClassicalFamily f);
std::optional<ClassicalFamily> classical_family_from_name(std::string_view name);
int classical_family_arity(ClassicalFamily f);

/// A connective: its surface signature, the pair of Dunn-style
/// evaluation conditions, and its intended classical reading.
struct ConnectiveDef {
  ConnectiveSignature signature;
  ConditionExpr truth_condition;    // defines 1 ∈ σ(⊕(args))
  ConditionExpr falsity_condition;  // defines 0 ∈ σ(⊕(args))
  ClassicalFamily classical_counterpart;
};

/// A total assignment of interpretations to a finite variable set.
/// Variables are kept sorted.
class Valuation {
public:
  Valuation() = default;
  explicit Valuation(std::vector<std::string> sorted_vars);

  void assign(std::string_view var, Interpretation value);  // var must exist
  Interpretation value(std::string_view var) const;         // throws EvalError when unbound
  bool bound(std::string_view var) const;

  const std::vector<std::string>& variables() const { return vars_; }
  std::span<const Interpretation> values() const { return values_; }
  Interpretation& value_at(std::size_t i) { return values_[i]; }

  static Valuation from_pairs(std::vector<std::pair<std::string, Interpretation>> pairs);

  std::string to_string() const;  // "p={1} q={1,0}"

  friend bool operator==(const Valuation&, const Valuation&) = default;

private:
  std::vector<std::string> vars_;
  std::vector<Interpretation> values_;
};

/// Result of a closure check: the first connective application that
/// leaves the admissible set.
struct ClosureViolation {
  std::string symbol;
  std::vector<Interpretation> args;
  Interpretation result;

  std::string to_string() const;
};

/// A named set of connective definitions plus the admissible
/// interpretations. Immutable after construction; construction
/// validates signatures and precomputes the connective tables.
class LogicSpec {
public:
  LogicSpec(std::string name, std::vector<ConnectiveDef> connectives,
            std::vector<Interpretation> admissible);

  const std::string& name() const { return name_; }
  const std::vector<ConnectiveDef>& connectives() const { return connectives_; }
  const std::vector<Interpretation>& admissible() const { return admissible_; }
  bool admits(Interpretation v) const;

  const ConnectiveDef* find_symbol(std::string_view symbol) const;
  const ConnectiveDef* find_token(std::string_view token) const;
  /// Finds by token first, then by display symbol; throws EvalError if absent.
  const ConnectiveDef& require_connective(std::string_view token_or_symbol) const;

  std::span<const ConnectiveSignature> signatures() const { return signatures_; }

  Formula parse(std::string_view text) const { return parse_formula(text, signatures()); }
  std::string render(const Formula& f) const { return render_formula(f, signatures()); }

  /// Table over the full four-interpretation domain for one connective,
  /// indexed by canonical indices (row-major for arity 2).
  std::span<const Interpretation> full_table(std::size_t connective_index) const;
  std::size_t connective_index(std::string_view symbol) const;  // throws EvalError

  friend std::optional<ClosureViolation> closure_check(const LogicSpec& spec);

private:
  std::string name_;
  std::vector<ConnectiveDef> connectives_;
  std::vector<Interpretation> admissible_;
  std::vector<ConnectiveSignature> signatures_;
  std::vector<std::vector<Interpretation>> tables_;          // per connective
  std::optional<ClosureViolation> closure_violation_;
};

/// ok (nullopt) iff every connective maps admissible tuples to
/// admissible results; otherwise the first violation, connectives in
/// definition order and argument tuples in canonical row-major order.
std::optional<ClosureViolation> closure_check(const LogicSpec& spec);

/// Throws SpecError when the spec fails its closure check.
void require_closure(const LogicSpec& spec);

/// Recursive evaluation of a formula under a valuation.
/// Requires closure (checked) and all variables bound.
Interpretation evaluate(const Formula& f, const Valuation& v, const LogicSpec& spec);

/// One connective's derived table over the admissible interpretations,
/// rows/columns in canonical order.
struct TruthTable {
  std::string symbol;
  std::string token;
  int arity = 1;
  std::vector<Interpretation> axis;   // admissible, canonical order
  std::vector<Interpretation> cells;  // axis^arity, row-major

  Interpretation cell(std::span<const Interpretation> args) const;
};

TruthTable truth_table(std::string_view token_or_symbol, const LogicSpec& spec);

/// Streams the |admissible|^|vars| valuations in lexicographic order:
/// variables sorted alphabetically, interpretations in canonical order,
/// the first variable most significant.
class ValuationEnumerator {
public:
  ValuationEnumerator(std::vector<std::string> vars, std::vector<Interpretation> admissible);

  /// Number of valuations in the stream (1 for the empty variable set).
  std::uint64_t count() const;

  /// Returns false once the stream is exhausted.
  bool next(Valuation& out);

  void reset();

private:
  std::vector<std::string> vars_;
  std::vector<Interpretation> admissible_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
  bool first_ = true;
};

std::vector<Valuation> enumerate_valuations(std::vector<std::string> vars,
                                            std::vector<Interpretation> admissible);

}  // namespace dunn
