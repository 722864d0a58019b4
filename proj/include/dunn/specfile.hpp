#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dunn/semantics.hpp"

namespace dunn {

/// One connective entry of a spec document. Conditions are DSL text.
struct SpecConnectiveEntry {
  std::string token;
  std::string symbol;
  int arity = 2;
  int precedence = 0;
  std::string truth;
  std::string falsity;
  std::string classical_counterpart;  // a family name, or "self"
};

/// The on-disk form of a logic. format_version is currently 1.
struct SpecDocument {
  int format_version = 1;
  std::string name;
  std::vector<std::string> admissible;  // "{1}", "{1,0}", "{}", "{0}" or T/B/N/F
  std::vector<SpecConnectiveEntry> connectives;

  static SpecDocument from_json_text(std::string_view text);  // throws SpecError with location
  std::string to_json_text() const;

  static SpecDocument load_file(const std::string& path);
  void save_file(const std::string& path) const;
};

/// Validates and builds the logic: distinct tokens, conditions within
/// arity, closure check (a violation is reported with its witness).
/// "self" counterparts resolve to negation for unary connectives and by
/// the default precedence bands (30/20/10) for binary ones.
LogicSpec load_spec(const SpecDocument& doc);

/// Same validation but tolerates a closure violation, so the `closure`
/// diagnostic can report it instead of refusing to load.
LogicSpec load_spec_unchecked(const SpecDocument& doc);

/// Inverse of load_spec up to table identity: load_spec(save_spec(L))
/// has the same tables, admissible set, tokens and counterparts.
SpecDocument save_spec(const LogicSpec& spec);

}  // namespace dunn
