#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunn/errors.hpp"

namespace dunn {

/// How a connective appears in source text and in rendered output.
/// Fixity is implied: arity-1 connectives are prefix, arity-2 infix.
struct ConnectiveSignature {
  std::string symbol;  // display name, e.g. "∼R"
  std::string token;   // ASCII source token, e.g. "~R"
  int arity = 2;       // 1 or 2
  int precedence = 0;  // higher binds tighter (infix only)

  friend bool operator==(const ConnectiveSignature&, const ConnectiveSignature&) = default;
};

/// Default precedence ranks: unary > ∧-family > ∨-family > →-family.
inline constexpr int kPrecedenceUnary = 40;
inline constexpr int kPrecedenceConjunction = 30;
inline constexpr int kPrecedenceDisjunction = 20;
inline constexpr int kPrecedenceConditional = 10;

/// An immutable propositional formula: an atom or a connective applied
/// to argument formulas. Copies share structure.
class Formula {
public:
  static Formula atom(std::string name);  // throws SpecError on a bad name
  static Formula apply(std::string symbol, std::vector<Formula> args);

  bool is_atom() const;
  const std::string& atom_name() const;          // atoms only
  const std::string& symbol() const;             // applications only
  const std::vector<Formula>& args() const;      // applications only

  bool operator==(const Formula& other) const;   // structural
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Atom names match [a-z][a-zA-Z0-9_]*.
bool is_valid_atom_name(std::string_view name);

/// Sorted, duplicate-free list of the atoms occurring in `f`.
std::vector<std::string> variables(const Formula& f);

/// Simultaneous substitution; atoms not in the map are unchanged.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& map);

/// Parses `text` against the given connective signatures. Longest-token
/// lexing; unary binds tightest; among infix connectives higher
/// precedence binds tighter, ties are left-associative; parentheses
/// override. The biconditional macros <-> / <=> / <->w expand to
/// (A→B)∧(B→A) over the tokens -> / => / ->w together with &, and are
/// available exactly when those tokens are present in `signatures`.
Formula parse_formula(std::string_view text, std::span<const ConnectiveSignature> signatures);

/// Renders with minimal parentheses; parse(render(f)) == f.
/// Throws SpecError when a symbol of `f` is not in `signatures`.
std::string render_formula(const Formula& f, std::span<const ConnectiveSignature> signatures);

/// The three fixed parser-level biconditional macros.
struct BiconditionalMacro {
  std::string_view token;        // e.g. "<->"
  std::string_view conditional;  // underlying conditional token, e.g. "->"
};
std::span<const BiconditionalMacro> biconditional_macros();

}  // namespace dunn
