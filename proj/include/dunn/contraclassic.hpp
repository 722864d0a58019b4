#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dunn/conditions.hpp"
#include "dunn/consequence.hpp"
#include "dunn/semantics.hpp"

namespace dunn {

/// The FDE-style condition pair a classical family contributes, plus
/// its two-valued profiles. Truth and falsity profiles of one family
/// are complementary.
struct ClassicalCatalogEntry {
  ClassicalFamily family;
  int arity;
  ConditionExpr truth_condition;
  ConditionExpr falsity_condition;
  BooleanFunction truth_profile;
  BooleanFunction falsity_profile;
};

/// The comparison catalog: identity, negation, ∧, ∨, →, ↔.
const std::vector<ClassicalCatalogEntry>& classical_catalog();
const ClassicalCatalogEntry& classical_catalog_entry(ClassicalFamily family);

/// The two-valued spec a logic is measured against: admissible {{1},{0}},
/// every connective redefined by the classical conditions of its declared
/// counterpart family. Symbols and tokens are retained, so formulas
/// re-evaluate unchanged.
LogicSpec classical_benchmark(const LogicSpec& spec);

/// True iff the argument is valid in `spec` but invalid in its
/// classical benchmark.
bool is_contra_classical_witness(const Argument& arg, const LogicSpec& spec);
bool is_contra_classical_witness(const Argument& arg, const LogicSpec& spec,
                                 const LogicSpec& benchmark);

/// Limits for the bounded searches.
struct WitnessSearchBounds {
  int max_vars = 2;       // >= 1
  int max_depth = 2;      // >= 0
  int max_premises = 2;   // 0..2 in the CLI, any >= 0 here
  std::chrono::milliseconds time_budget = std::chrono::milliseconds(120000);

  std::string to_string() const;  // "vars=2, depth=2, premises=2"
};

/// Outcome of a bounded witness search. `truncated` is set when the
/// time budget ran out; the witnesses found so far are still returned,
/// in canonical order.
struct WitnessSearchResult {
  std::vector<Argument> witnesses;
  bool truncated = false;
};

/// Exhaustively enumerates formulas over at most max_vars atoms up to
/// max_depth, deduplicated by their value-vector signature (in the
/// logic and in its benchmark), then scans every argument with at most
/// max_premises premises for contra-classical witnesses.
WitnessSearchResult find_contra_witnesses(const LogicSpec& spec, const WitnessSearchBounds& bounds);

enum class ConditionPolarity { truth, falsity };
std::string_view to_string(ConditionPolarity p);

/// Where one evaluation condition classically comes from.
struct ConditionSource {
  std::string symbol;
  std::string token;
  ConditionPolarity polarity;                     // which condition of the connective
  std::optional<ClassicalFamily> family;          // matched family, if any
  std::optional<ConditionPolarity> profile;       // which profile of that family matched
  bool borrowed = false;
};

struct SourceReport {
  std::string logic_name;
  std::vector<ConditionSource> entries;  // two per connective, truth first
};

/// Matches every condition's classical profile against the catalog.
/// Same-polarity profiles are tried before opposite-polarity ones.
/// A condition is borrowed when it matches another family, or its own
/// family with the opposite polarity.
SourceReport source_classification(const LogicSpec& spec);

struct NegationInconsistencyResult {
  std::vector<Formula> witnesses;
  bool truncated = false;
};

/// Formulas A within the bounds such that both A and negation(A) are
/// logical truths. `negation_symbol` must name a unary connective.
NegationInconsistencyResult negation_inconsistency_witnesses(const LogicSpec& spec,
                                                             std::string_view negation_symbol,
                                                             const WitnessSearchBounds& bounds);

}  // namespace dunn
