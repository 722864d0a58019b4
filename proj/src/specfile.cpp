#include "dunn/specfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dunn {

namespace {

using nlohmann::json;

ClassicalFamily resolve_counterpart(const SpecConnectiveEntry& entry) {
  if (entry.classical_counterpart == "self") {
    if (entry.arity == 1) return ClassicalFamily::negation;
    switch (entry.precedence) {
      case kPrecedenceConjunction: return ClassicalFamily::conjunction;
      case kPrecedenceDisjunction: return ClassicalFamily::disjunction;
      case kPrecedenceConditional: return ClassicalFamily::implication;
      default:
        throw SpecError("connective '" + entry.symbol + "': cannot resolve counterpart \"self\" (precedence " +
                        std::to_string(entry.precedence) +
                        " is not one of the default family bands 30/20/10); declare an explicit family");
    }
  }
  if (auto family = classical_family_from_name(entry.classical_counterpart)) return *family;
  throw SpecError("connective '" + entry.symbol + "': unknown classical_counterpart '" +
                  entry.classical_counterpart + "'");
}

}  // namespace

SpecDocument SpecDocument::from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec document is not valid JSON: ") + e.what());
  }
  try {
    SpecDocument doc;
    doc.format_version = j.at("format_version").get<int>();
    if (doc.format_version != 1) {
      throw SpecError("unsupported format_version " + std::to_string(doc.format_version));
    }
    doc.name = j.at("name").get<std::string>();
    for (const json& a : j.at("admissible")) {
      doc.admissible.push_back(a.get<std::string>());
    }
    for (const json& c : j.at("connectives")) {
      SpecConnectiveEntry entry;
      entry.token = c.at("token").get<std::string>();
      entry.symbol = c.at("symbol").get<std::string>();
      entry.arity = c.at("arity").get<int>();
      entry.precedence = c.at("precedence").get<int>();
      entry.truth = c.at("truth").get<std::string>();
      entry.falsity = c.at("falsity").get<std::string>();
      entry.classical_counterpart = c.at("classical_counterpart").get<std::string>();
      doc.connectives.push_back(std::move(entry));
    }
    return doc;
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed spec document: ") + e.what());
  }
}

std::string SpecDocument::to_json_text() const {
  json j;
  j["format_version"] = format_version;
  j["name"] = name;
  j["admissible"] = admissible;
  json cs = json::array();
  for (const SpecConnectiveEntry& entry : connectives) {
    json c;
    c["token"] = entry.token;
    c["symbol"] = entry.symbol;
    c["arity"] = entry.arity;
    c["precedence"] = entry.precedence;
    c["truth"] = entry.truth;
    c["falsity"] = entry.falsity;
    c["classical_counterpart"] = entry.classical_counterpart;
    cs.push_back(std::move(c));
  }
  j["connectives"] = std::move(cs);
  return j.dump(2) + "\n";
}

SpecDocument SpecDocument::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

void SpecDocument::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write spec file '" + path + "'");
  out << to_json_text();
}

LogicSpec load_spec(const SpecDocument& doc) {
  LogicSpec spec = load_spec_unchecked(doc);
  require_closure(spec);
  return spec;
}

LogicSpec load_spec_unchecked(const SpecDocument& doc) {
  std::vector<Interpretation> admissible;
  for (const std::string& a : doc.admissible) {
    auto v = Interpretation::parse(a);
    if (!v) {
      throw SpecError("bad admissible entry '" + a + "' (expected {1}, {1,0}, {}, {0} or T/B/N/F)");
    }
    admissible.push_back(*v);
  }

  std::vector<ConnectiveDef> defs;
  for (const SpecConnectiveEntry& entry : doc.connectives) {
    // Everything that can throw is evaluated before the aggregate is
    // assembled (g++ 11 fails to unwind partially built aggregates).
    const ClassicalFamily counterpart = resolve_counterpart(entry);
    ConditionExpr truth = [&] {
      try {
        return ConditionExpr::parse(entry.truth);
      } catch (const ParseError& e) {
        throw SpecError("connective '" + entry.symbol + "': bad truth condition: " + e.what());
      }
    }();
    ConditionExpr falsity = [&] {
      try {
        return ConditionExpr::parse(entry.falsity);
      } catch (const ParseError& e) {
        throw SpecError("connective '" + entry.symbol + "': bad falsity condition: " + e.what());
      }
    }();
    defs.push_back(ConnectiveDef{
        ConnectiveSignature{entry.symbol, entry.token, entry.arity, entry.precedence},
        std::move(truth), std::move(falsity), counterpart});
  }

  return LogicSpec(doc.name, std::move(defs), std::move(admissible));
}

SpecDocument save_spec(const LogicSpec& spec) {
  SpecDocument doc;
  doc.format_version = 1;
  doc.name = spec.name();
  for (Interpretation v : spec.admissible()) doc.admissible.push_back(v.to_string());
  for (const ConnectiveDef& def : spec.connectives()) {
    SpecConnectiveEntry entry;
    entry.token = def.signature.token;
    entry.symbol = def.signature.symbol;
    entry.arity = def.signature.arity;
    entry.precedence = def.signature.precedence;
    entry.truth = def.truth_condition.to_string();
    entry.falsity = def.falsity_condition.to_string();
    entry.classical_counterpart = std::string(to_string(def.classical_counterpart));
    doc.connectives.push_back(std::move(entry));
  }
  return doc;
}

}  // namespace dunn
