#include "dunn/interpretation.hpp"

#include <algorithm>
#include <cctype>

namespace dunn {

const std::array<Interpretation, 4>& Interpretation::all() {
  static const std::array<Interpretation, 4> values = {
      Interpretation::just_true(),
      Interpretation::both(),
      Interpretation::neither(),
      Interpretation::just_false(),
  };
  return values;
}

std::string Interpretation::to_string() const {
  switch (canonical_index()) {
    case 0: return "{1}";
    case 1: return "{1,0}";
    case 2: return "{}";
    default: return "{0}";
  }
}

std::optional<Interpretation> Interpretation::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact == "{1}") return just_true();
  if (compact == "{1,0}" || compact == "{0,1}") return both();
  if (compact == "{}") return neither();
  if (compact == "{0}") return just_false();
  if (compact == "T" || compact == "t") return just_true();
  if (compact == "B" || compact == "b") return both();
  if (compact == "N" || compact == "n") return neither();
  if (compact == "F" || compact == "f") return just_false();
  return std::nullopt;
}

}  // namespace dunn
