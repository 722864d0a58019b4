#include "dunn/consequence.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dunn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Argument Argument::parse(std::string_view text, const LogicSpec& spec) {
  const std::size_t turnstile = text.find("|-");
  if (turnstile == std::string_view::npos) {
    throw ParseError("argument text needs a '|-' turnstile", text.size());
  }
  std::string_view left = text.substr(0, turnstile);
  std::string_view right = text.substr(turnstile + 2);
  if (trim(right).empty()) throw ParseError("missing conclusion after '|-'", text.size());

  std::vector<Formula> premises;
  std::string_view rest = trim(left);
  if (!rest.empty()) {
    std::size_t base = 0;
    std::string_view scan = left;
    for (;;) {
      const std::size_t comma = scan.find(',');
      std::string_view piece = comma == std::string_view::npos ? scan : scan.substr(0, comma);
      if (trim(piece).empty()) {
        throw ParseError("empty premise", base + piece.size());
      }
      try {
        premises.push_back(parse_formula(piece, spec.signatures()));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in premise: ") + e.what(), base + e.offset());
      }
      if (comma == std::string_view::npos) break;
      scan = scan.substr(comma + 1);
      base += comma + 1;
    }
  }

  Formula conclusion = [&] {
    try {
      return parse_formula(right, spec.signatures());
    } catch (const ParseError& e) {
      throw ParseError(std::string("in conclusion: ") + e.what(), turnstile + 2 + e.offset());
    }
  }();

  return Argument{std::move(premises), std::move(conclusion)};
}

std::string Argument::render(const LogicSpec& spec) const {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (i > 0) out += ", ";
    out += spec.render(premises[i]);
  }
  if (!premises.empty()) out += ' ';
  out += "|- ";
  out += spec.render(conclusion);
  return out;
}

Verdict entails(const Argument& arg, const LogicSpec& spec) {
  require_closure(spec);

  std::set<std::string> vars;
  for (const Formula& p : arg.premises) {
    for (std::string& v : variables(p)) vars.insert(std::move(v));
  }
  for (std::string& v : variables(arg.conclusion)) vars.insert(std::move(v));

  ValuationEnumerator e({vars.begin(), vars.end()}, spec.admissible());
  Valuation v;
  while (e.next(v)) {
    bool premises_true = true;
    for (const Formula& p : arg.premises) {
      if (!evaluate(p, v, spec).is_true()) {
        premises_true = false;
        break;
      }
    }
    if (!premises_true) continue;
    if (!evaluate(arg.conclusion, v, spec).is_true()) {
      return Verdict::invalid(v);
    }
  }
  return Verdict::valid_verdict();
}

Verdict is_logical_truth(const Formula& f, const LogicSpec& spec) {
  return entails(Argument{{}, f}, spec);
}

ValueComparison same_value(const Formula& f, const Formula& g, const LogicSpec& spec) {
  require_closure(spec);

  std::set<std::string> vars;
  for (std::string& v : variables(f)) vars.insert(std::move(v));
  for (std::string& v : variables(g)) vars.insert(std::move(v));

  ValuationEnumerator e({vars.begin(), vars.end()}, spec.admissible());
  Valuation v;
  while (e.next(v)) {
    Interpretation a = evaluate(f, v, spec);
    Interpretation b = evaluate(g, v, spec);
    if (a != b) return ValueComparison{false, v, a, b};
  }
  return ValueComparison{true, std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace dunn
