#include "dunn/presets.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dunn {

namespace {

ConnectiveDef connective(std::string symbol, std::string token, int arity, int precedence,
                         std::string_view truth, std::string_view falsity,
                         ClassicalFamily counterpart) {
  ConditionExpr truth_condition = ConditionExpr::parse(truth);
  ConditionExpr falsity_condition = ConditionExpr::parse(falsity);
  return ConnectiveDef{ConnectiveSignature{std::move(symbol), std::move(token), arity, precedence},
                       std::move(truth_condition), std::move(falsity_condition), counterpart};
}

// The FDE connectives. Truth/falsity condition pairs transcribed from
// the recursive evaluation clauses.
ConnectiveDef de_morgan_negation() {
  return connective("∼", "~", 1, kPrecedenceUnary, "0 in A1", "1 in A1",
                    ClassicalFamily::negation);
}
ConnectiveDef fde_conjunction() {
  return connective("∧", "&", 2, kPrecedenceConjunction, "1 in A1 and 1 in A2",
                    "0 in A1 or 0 in A2", ClassicalFamily::conjunction);
}
ConnectiveDef fde_disjunction() {
  return connective("∨", "|", 2, kPrecedenceDisjunction, "1 in A1 or 1 in A2",
                    "0 in A1 and 0 in A2", ClassicalFamily::disjunction);
}
ConnectiveDef fde_conditional() {
  return connective("→", "->", 2, kPrecedenceConditional, "0 in A1 or 1 in A2",
                    "1 in A1 and 0 in A2", ClassicalFamily::implication);
}
ConnectiveDef boolean_negation() {
  return connective("¬", "!", 1, kPrecedenceUnary, "1 notin A1", "0 notin A1",
                    ClassicalFamily::negation);
}
ConnectiveDef material_conditional() {
  return connective("⊃", "=>", 2, kPrecedenceConditional, "1 notin A1 or 1 in A2",
                    "1 in A1 and 0 in A2", ClassicalFamily::implication);
}

std::vector<Interpretation> all_four() {
  return {Interpretation::just_true(), Interpretation::both(), Interpretation::neither(),
          Interpretation::just_false()};
}

LogicSpec build_preset(PresetId id) {
  switch (id) {
    case PresetId::fde:
      return LogicSpec("FDE",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        fde_conditional()},
                       all_four());
    case PresetId::k3:
      return LogicSpec("K3",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        fde_conditional()},
                       {Interpretation::just_true(), Interpretation::neither(),
                        Interpretation::just_false()});
    case PresetId::lp:
      return LogicSpec("LP",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        fde_conditional()},
                       {Interpretation::just_true(), Interpretation::both(),
                        Interpretation::just_false()});
    case PresetId::cl:
      return LogicSpec("CL",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        fde_conditional()},
                       {Interpretation::just_true(), Interpretation::just_false()});
    case PresetId::fde_neg:
      return LogicSpec("FDE-NEG",
                       {de_morgan_negation(), boolean_negation(), fde_conjunction(),
                        fde_disjunction(), fde_conditional()},
                       all_four());
    case PresetId::fde_mat:
      return LogicSpec("FDE-MAT",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        fde_conditional(), material_conditional()},
                       all_four());
    case PresetId::ruet:
      // Truth condition of negation replaced by non-membership.
      return LogicSpec("RUET",
                       {connective("∼R", "~R", 1, kPrecedenceUnary, "0 notin A1", "1 in A1",
                                   ClassicalFamily::negation),
                        fde_conjunction(), fde_disjunction(), fde_conditional()},
                       all_four());
    case PresetId::cp:
      // Falsity condition of negation replaced by non-membership.
      return LogicSpec("CP",
                       {connective("∼K", "~K", 1, kPrecedenceUnary, "0 in A1", "1 notin A1",
                                   ClassicalFamily::negation),
                        fde_conjunction(), fde_disjunction(), fde_conditional()},
                       all_four());
    case PresetId::tonk_and:
      // tonk: truth condition of disjunction, falsity condition of
      // conjunction. ⊃ and ∧ are included so ≡ can be expressed.
      return LogicSpec("TONK-AND",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        fde_conditional(), material_conditional(),
                        connective("∧t", "&t", 2, kPrecedenceConjunction,
                                   "1 in A1 or 1 in A2", "0 in A1 or 0 in A2",
                                   ClassicalFamily::conjunction)},
                       all_four());
    case PresetId::tonk_or:
      return LogicSpec("TONK-OR",
                       {de_morgan_negation(), fde_conjunction(),
                        connective("∨t", "|t", 2, kPrecedenceDisjunction,
                                   "1 in A1 and 1 in A2", "0 in A1 and 0 in A2",
                                   ClassicalFamily::disjunction),
                        fde_conditional()},
                       all_four());
    case PresetId::blsup:
      return LogicSpec("BLSUP",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        material_conditional(),
                        connective("∧AA", "&aa", 2, kPrecedenceConjunction,
                                   "1 in A1 and 1 in A2", "0 in A1 and 0 in A2",
                                   ClassicalFamily::conjunction),
                        connective("∨AA", "|aa", 2, kPrecedenceDisjunction,
                                   "1 in A1 or 1 in A2", "0 in A1 or 0 in A2",
                                   ClassicalFamily::disjunction)},
                       all_four());
    case PresetId::df:
      return LogicSpec("DF",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        connective("→DF", "->df", 2, kPrecedenceConditional,
                                   "1 in A1 and 1 in A2", "1 in A1 and 0 in A2",
                                   ClassicalFamily::implication)},
                       all_four());
    case PresetId::mc:
      // Material conditional with its falsity condition replaced;
      // the ↔W macro expands over ->w and &.
      return LogicSpec("MC",
                       {de_morgan_negation(), fde_conjunction(), fde_disjunction(),
                        connective("→W", "->w", 2, kPrecedenceConditional,
                                   "1 notin A1 or 1 in A2", "1 notin A1 or 0 in A2",
                                   ClassicalFamily::implication)},
                       all_four());
    case PresetId::pcon:
      // FDE truth conditions everywhere; falsity conditions of ∧, ∨ and
      // the conditional modified at once.
      return LogicSpec(
          "PCON",
          {de_morgan_negation(),
           connective("∧", "&", 2, kPrecedenceConjunction, "1 in A1 and 1 in A2",
                      "(1 in A1 and 0 in A2) or (0 in A1 and 1 in A2)",
                      ClassicalFamily::conjunction),
           connective("∨", "|", 2, kPrecedenceDisjunction, "1 in A1 or 1 in A2",
                      "0 in A1 or 0 in A2", ClassicalFamily::disjunction),
           connective("→W", "->w", 2, kPrecedenceConditional, "0 in A1 or 1 in A2",
                      "1 notin A1 or 0 in A2", ClassicalFamily::implication)},
          all_four());
    case PresetId::p1gen:
      // All four falsity conditions tweaked; not contra-classical.
      return LogicSpec(
          "P1GEN",
          {connective("∼", "~", 1, kPrecedenceUnary, "0 in A1", "0 notin A1",
                      ClassicalFamily::negation),
           connective("∧", "&", 2, kPrecedenceConjunction, "1 in A1 and 1 in A2",
                      "1 notin A1 or 1 notin A2", ClassicalFamily::conjunction),
           connective("∨", "|", 2, kPrecedenceDisjunction, "1 in A1 or 1 in A2",
                      "1 notin A1 and 1 notin A2", ClassicalFamily::disjunction),
           connective("→", "->", 2, kPrecedenceConditional, "0 in A1 or 1 in A2",
                      "0 notin A1 and 1 notin A2", ClassicalFamily::implication)},
          all_four());
  }
  throw SpecError("unknown preset id");
}

}  // namespace

std::span<const PresetId> all_presets() {
  static const PresetId ids[] = {
      PresetId::fde,  PresetId::k3,       PresetId::lp,      PresetId::cl,
      PresetId::fde_neg, PresetId::fde_mat, PresetId::ruet,    PresetId::cp,
      PresetId::tonk_and, PresetId::tonk_or, PresetId::blsup, PresetId::df,
      PresetId::mc,   PresetId::pcon,     PresetId::p1gen,
  };
  return ids;
}

std::string_view preset_name(PresetId id) {
  switch (id) {
    case PresetId::fde: return "FDE";
    case PresetId::k3: return "K3";
    case PresetId::lp: return "LP";
    case PresetId::cl: return "CL";
    case PresetId::fde_neg: return "FDE-NEG";
    case PresetId::fde_mat: return "FDE-MAT";
    case PresetId::ruet: return "RUET";
    case PresetId::cp: return "CP";
    case PresetId::tonk_and: return "TONK-AND";
    case PresetId::tonk_or: return "TONK-OR";
    case PresetId::blsup: return "BLSUP";
    case PresetId::df: return "DF";
    case PresetId::mc: return "MC";
    case PresetId::pcon: return "PCON";
    case PresetId::p1gen: return "P1GEN";
  }
  return "?";
}

std::optional<PresetId> preset_from_name(std::string_view name) {
  std::string upper;
  upper.reserve(name.size());
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (PresetId id : all_presets()) {
    if (upper == preset_name(id)) return id;
  }
  return std::nullopt;
}

const LogicSpec& get_preset(PresetId id) {
  static const std::map<PresetId, LogicSpec> presets = [] {
    std::map<PresetId, LogicSpec> out;
    for (PresetId id : all_presets()) out.emplace(id, build_preset(id));
    return out;
  }();
  return presets.at(id);
}

const LogicSpec& get_preset(std::string_view name) {
  std::optional<PresetId> id = preset_from_name(name);
  if (!id) throw SpecError("unknown preset '" + std::string(name) + "'");
  return get_preset(*id);
}

}  // namespace dunn
