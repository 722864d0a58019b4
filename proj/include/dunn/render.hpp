#pragma once

#include <string>

#include "dunn/consequence.hpp"
#include "dunn/contraclassic.hpp"
#include "dunn/semantics.hpp"

namespace dunn {

enum class OutputFormat { text, machine };

/// Grid layout: header row of column interpretations, first
/// column of row interpretations. Unary tables print result | argument.
std::string render_table(const TruthTable& table, OutputFormat format);

std::string render_verdict(const Verdict& verdict, OutputFormat format);

std::string render_comparison(const ValueComparison& cmp, OutputFormat format);

std::string render_closure(const std::optional<ClosureViolation>& violation, OutputFormat format);

/// Bullet list of classical sources, e.g. "falsity(->w) = classical falsity(∧) [borrowed]".
std::string render_source_report(const SourceReport& report, OutputFormat format);

std::string render_witnesses(const WitnessSearchResult& result, const LogicSpec& spec,
                             const WitnessSearchBounds& bounds, OutputFormat format);

std::string render_negation_witnesses(const NegationInconsistencyResult& result,
                                      const LogicSpec& spec, const WitnessSearchBounds& bounds,
                                      OutputFormat format);

/// Per connective and polarity: the classification of the change from
/// the counterpart family's FDE-style condition to the actual one.
std::string render_condition_diff(const LogicSpec& spec, OutputFormat format);

}  // namespace dunn
