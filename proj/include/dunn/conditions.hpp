#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunn/errors.hpp"
#include "dunn/interpretation.hpp"

namespace dunn {

/// One of the expressions `v ∈ σ(Ak)` / `v ∉ σ(Ak)` that evaluation
/// conditions are made of. `arg` is the 1-based argument position.
struct DunnAtom {
  TruthValue value;
  bool member;  // true: ∈, false: ∉
  int arg;

  friend bool operator==(const DunnAtom&, const DunnAtom&) = default;
};

/// The swap 1∈ ↔ 0∉ and 0∈ ↔ 1∉. An involution.
constexpr DunnAtom boolean_counterpart(const DunnAtom& a) {
  return DunnAtom{opposite(a.value), !a.member, a.arg};
}

/// A meta-language expression over Dunn atoms. Node connectives are
/// read classically. Immutable; cheap to copy (shared subtrees).
class ConditionExpr {
public:
  enum class Kind { atom, negation, conjunction, disjunction, implication, equivalence };

  static ConditionExpr atom(DunnAtom a);
  static ConditionExpr negation(ConditionExpr operand);
  static ConditionExpr conjunction(ConditionExpr lhs, ConditionExpr rhs);
  static ConditionExpr disjunction(ConditionExpr lhs, ConditionExpr rhs);
  static ConditionExpr implication(ConditionExpr lhs, ConditionExpr rhs);
  static ConditionExpr equivalence(ConditionExpr lhs, ConditionExpr rhs);

  Kind kind() const;
  const DunnAtom& atom_value() const;        // kind() == atom only
  int child_count() const;                   // 0, 1 or 2
  const ConditionExpr& child(int i) const;

  /// Highest argument index referenced by any leaf.
  int max_arg() const;

  /// All leaves, left to right.
  std::vector<DunnAtom> leaves() const;

  /// Canonical DSL text, e.g. "1 in A1 and not (0 notin A2)".
  std::string to_string() const;

  /// Parses the condition DSL: atoms `1 in A1` / `0 notin A2`,
  /// operators not/and/or/implies/iff (case-insensitive), parentheses.
  /// Throws ParseError with a character offset.
  static ConditionExpr parse(std::string_view text);

  bool operator==(const ConditionExpr& other) const;  // structural
  bool operator!=(const ConditionExpr& other) const { return !(*this == other); }

private:
  struct Node;
  explicit ConditionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ConditionExpr make(Kind kind, std::vector<ConditionExpr> children);
  std::shared_ptr<const Node> node_;
};

/// Evaluates a condition against the argument interpretations:
/// `v ∈ σ(Ak)` holds iff v ∈ args[k-1]. Throws EvalError when a leaf
/// refers past the end of `args`.
bool eval_condition(const ConditionExpr& c, std::span<const Interpretation> args);

/// A two-valued truth function, the "classical reading" of a condition.
/// values[i] is the output for the i-th argument tuple in
/// argument-lexicographic order with true first (index 0 = all true,
/// first argument most significant).
struct BooleanFunction {
  int arity = 0;
  std::vector<bool> values;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

/// Restricts a condition to classical argument interpretations
/// ({1} for a true argument, {0} for a false one) and returns the
/// induced Boolean function.
BooleanFunction classical_profile(const ConditionExpr& c, int arity);

/// The kinds of change between two evaluation conditions.
enum class ChangeKind {
  identical,
  c1_value_change,
  c2_membership_change,
  tweaking,
  c3_relation_change,
  c4_extra_condition,
  c5_mixed,
};

std::string_view to_string(ChangeKind k);

/// True iff `to` has the same tree shape as `from` and at least one
/// leaf replaced by its Boolean counterpart, all other leaves equal.
bool is_tweaking(const ConditionExpr& from, const ConditionExpr& to);

/// Total classification of the change from one condition to another,
/// checked in the order Identical, Tweaking, C1, C2, C3, C4, with C5
/// as the residual class.
ChangeKind classify_change(const ConditionExpr& from, const ConditionExpr& to);

}  // namespace dunn
