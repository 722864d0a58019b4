#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dunn/formula.hpp"
#include "dunn/semantics.hpp"

namespace dunn {

/// Premises and a conclusion over one logic.
struct Argument {
  std::vector<Formula> premises;
  Formula conclusion;

  /// Parses "B1, B2 |- A"; the left side may be empty ("|- A").
  static Argument parse(std::string_view text, const LogicSpec& spec);

  std::string render(const LogicSpec& spec) const;
};

/// Valid, or invalid with the first counter-valuation in canonical
/// enumeration order (all premises true, conclusion not true).
struct Verdict {
  bool valid = false;
  std::optional<Valuation> counterexample;

  static Verdict valid_verdict() { return {true, std::nullopt}; }
  static Verdict invalid(Valuation v) { return {false, std::move(v)}; }

  explicit operator bool() const { return valid; }
};

/// Tarskian consequence by exhaustive enumeration over the variables of
/// the whole argument. Requires the spec to pass its closure check.
Verdict entails(const Argument& arg, const LogicSpec& spec);

/// entails with no premises.
Verdict is_logical_truth(const Formula& f, const LogicSpec& spec);

/// Result of comparing two formulas valuation-by-valuation.
struct ValueComparison {
  bool same = false;
  std::optional<Valuation> witness;          // first differing valuation
  std::optional<Interpretation> lhs_value;   // values at the witness
  std::optional<Interpretation> rhs_value;

  explicit operator bool() const { return same; }
};

/// True iff f and g take the same interpretation under every valuation
/// over the union of their variables; otherwise the first differing
/// valuation in canonical order, with both values.
ValueComparison same_value(const Formula& f, const Formula& g, const LogicSpec& spec);

}  // namespace dunn
