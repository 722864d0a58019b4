#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "dunn/semantics.hpp"

namespace dunn {

/// The built-in logics.
enum class PresetId {
  fde,       // ∼, ∧, ∨, →; all four interpretations
  k3,        // FDE without {1,0}
  lp,        // FDE without {}
  cl,        // FDE restricted to {1} and {0}
  fde_neg,   // FDE plus Boolean negation ¬
  fde_mat,   // FDE plus the material conditional ⊃
  ruet,      // ∼R: truth condition of negation flipped to non-membership
  cp,        // ∼K: falsity condition of negation flipped to non-membership
  tonk_and,  // ∧t: conjunction with the truth condition of disjunction
  tonk_or,   // ∨t: disjunction with the truth condition of conjunction
  blsup,     // ∧AA/∨AA informational meet and join, with ⊃
  df,        // →DF: conditional with a conjunctive truth condition
  mc,        // →W: material conditional with connexive falsity condition
  pcon,      // three falsity conditions modified at once
  p1gen,     // all four falsity conditions tweaked
};

std::span<const PresetId> all_presets();
std::string_view preset_name(PresetId id);
std::optional<PresetId> preset_from_name(std::string_view name);  // case-insensitive

/// Immutable shared preset instance. Every preset passes its closure check.
const LogicSpec& get_preset(PresetId id);
const LogicSpec& get_preset(std::string_view name);  // throws SpecError on unknown names

}  // namespace dunn
