// Acceptance suite. Runs every criterion at desk scale and prints one
// pass/fail line each; exits non-zero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dunn/consequence.hpp"
#include "dunn/contraclassic.hpp"
#include "dunn/presets.hpp"
#include "dunn/specfile.hpp"
#include "support/reference_tables.hpp"
#include "support/property_suites.hpp"

using namespace dunn;

namespace {

Interpretation I(const char* text) { return *Interpretation::parse(text); }

struct Criterion {
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << "\n    FAILED: " << what;
    }
  }
};

// --------------------------------------------------------------------------
// 1. Table conformance: the fourteen expected tables, zero tolerance.

void criterion_tables(Criterion& c) {
  auto unary = [&](PresetId id, const char* token, const refs::UnaryTable& expected) {
    TruthTable table = truth_table(token, get_preset(id));
    for (std::size_t r = 0; r < 4; ++r) {
      c.expect(table.cells[r] == refs::cell(expected.rows[r]),
               std::string(token) + " row " + std::to_string(r));
    }
  };
  auto binary = [&](PresetId id, const char* token, const refs::BinaryTable& expected) {
    TruthTable table = truth_table(token, get_preset(id));
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t col = 0; col < 4; ++col) {
        c.expect(table.cells[r * 4 + col] == refs::cell(expected.rows[r][col]),
                 std::string(token) + " cell " + std::to_string(r) + "," + std::to_string(col));
      }
    }
  };
  unary(PresetId::fde, "~", refs::kDeMorganNegation);
  binary(PresetId::fde, "&", refs::kConjunction);
  binary(PresetId::fde, "|", refs::kDisjunction);
  binary(PresetId::fde, "->", refs::kConditional);
  unary(PresetId::fde_neg, "!", refs::kBooleanNegation);
  binary(PresetId::fde_mat, "=>", refs::kMaterialConditional);
  unary(PresetId::ruet, "~R", refs::kRuetNegation);
  unary(PresetId::cp, "~K", refs::kKamideNegation);
  binary(PresetId::tonk_and, "&t", refs::kTonkConjunction);
  binary(PresetId::blsup, "&aa", refs::kInformationalMeet);
  binary(PresetId::tonk_or, "|t", refs::kTonkDisjunction);
  binary(PresetId::blsup, "|aa", refs::kInformationalJoin);
  binary(PresetId::df, "->df", refs::kDeFinettiConditional);
  binary(PresetId::mc, "->w", refs::kWansingConditional);
}

// --------------------------------------------------------------------------
// 2. Extension facts: excluded middle and explosion across CL/K3/LP/FDE.

void criterion_extensions(Criterion& c) {
  auto taut = [](PresetId id, const char* text) {
    const LogicSpec& spec = get_preset(id);
    return is_logical_truth(spec.parse(text), spec);
  };
  auto entail = [](PresetId id, const char* text) {
    const LogicSpec& spec = get_preset(id);
    return entails(Argument::parse(text, spec), spec);
  };

  c.expect(taut(PresetId::cl, "p | ~p").valid, "CL: excluded middle");
  c.expect(entail(PresetId::cl, "p & ~p |- q").valid, "CL: explosion");

  Verdict k3_em = taut(PresetId::k3, "p | ~p");
  c.expect(!k3_em.valid, "K3: excluded middle fails");
  c.expect(k3_em.counterexample && k3_em.counterexample->value("p") == I("{}"),
           "K3: counterexample is p={}");
  c.expect(entail(PresetId::k3, "p & ~p |- q").valid, "K3: explosion");

  c.expect(taut(PresetId::lp, "p | ~p").valid, "LP: excluded middle");
  Verdict lp_ex = entail(PresetId::lp, "p & ~p |- q");
  c.expect(!lp_ex.valid, "LP: explosion fails");
  c.expect(lp_ex.counterexample && lp_ex.counterexample->value("p") == I("{1,0}"),
           "LP: counterexample has p={1,0}");

  c.expect(!taut(PresetId::fde, "p | ~p").valid, "FDE: excluded middle fails");
  c.expect(!entail(PresetId::fde, "p & ~p |- q").valid, "FDE: explosion fails");
}

// --------------------------------------------------------------------------
// 3. Validity roster.

void criterion_roster(Criterion& c) {
  auto valid_taut = [&](PresetId id, const char* text) {
    const LogicSpec& spec = get_preset(id);
    c.expect(is_logical_truth(spec.parse(text), spec).valid,
             std::string(preset_name(id)) + " |- " + text);
  };

  // RUET
  valid_taut(PresetId::ruet, "p | ~R ~R p");
  const LogicSpec& ruet = get_preset(PresetId::ruet);
  Verdict ruet_em = is_logical_truth(ruet.parse("p | ~R p"), ruet);
  c.expect(!ruet_em.valid && ruet_em.counterexample->value("p") == I("{0}"),
           "RUET: p | ~R p invalid with p={0}");

  // CP
  valid_taut(PresetId::cp, "~K(p & ~K ~K p)");
  valid_taut(PresetId::cp, "~K ~K (p & ~K ~K p)");

  // tonk
  valid_taut(PresetId::tonk_and, "~(p &t ~p) <=> (p &t ~p)");
  const LogicSpec& tonk = get_preset(PresetId::tonk_and);
  Verdict tonk_proj = entails(Argument::parse("p &t q |- q", tonk), tonk);
  c.expect(!tonk_proj.valid && tonk_proj.counterexample->value("p") == I("{1}") &&
               tonk_proj.counterexample->value("q") == I("{}"),
           "tonk: p &t q |- q fails exactly at p={1}, q={}");

  // BL⊃
  valid_taut(PresetId::blsup, "~(p &aa q) <=> (~p &aa ~q)");
  valid_taut(PresetId::blsup, "~(p |aa q) <=> (~p |aa ~q)");
  valid_taut(PresetId::blsup, "(p => p) |aa ~(p => p)");
  valid_taut(PresetId::blsup, "~((p => p) |aa ~(p => p))");

  // DF
  const LogicSpec& df = get_preset(PresetId::df);
  c.expect(entails(Argument::parse("p ->df q |- p", df), df).valid, "DF: conditional entails antecedent");

  // MC: Wansing, Aristotle + variant, Boethius ×2 + converses, witness pair
  valid_taut(PresetId::mc, "~(p ->w q) <->w (p ->w ~q)");
  valid_taut(PresetId::mc, "~(p ->w ~p)");
  valid_taut(PresetId::mc, "~(~p ->w p)");
  valid_taut(PresetId::mc, "(p ->w q) ->w ~(p ->w ~q)");
  valid_taut(PresetId::mc, "(p ->w ~q) ->w ~(p ->w q)");
  valid_taut(PresetId::mc, "~(p ->w ~q) ->w (p ->w q)");
  valid_taut(PresetId::mc, "~(p ->w q) ->w (p ->w ~q)");
  valid_taut(PresetId::mc, "(p & ~p) ->w p");
  valid_taut(PresetId::mc, "~((p & ~p) ->w p)");

  // PCON
  valid_taut(PresetId::pcon, "~(p ->w ~p)");
}

// --------------------------------------------------------------------------
// 4. Demi-negation identities.

void criterion_demi_negations(Criterion& c) {
  // Assembled through the spec-document path on purpose.
  const char* doc = R"({
    "format_version": 1, "name": "NEGATIONS",
    "admissible": ["{1}", "{1,0}", "{}", "{0}"],
    "connectives": [
      {"token": "~R", "symbol": "∼R", "arity": 1, "precedence": 40,
       "truth": "0 notin A1", "falsity": "1 in A1", "classical_counterpart": "negation"},
      {"token": "~K", "symbol": "∼K", "arity": 1, "precedence": 40,
       "truth": "0 in A1", "falsity": "1 notin A1", "classical_counterpart": "negation"},
      {"token": "!", "symbol": "¬", "arity": 1, "precedence": 40,
       "truth": "1 notin A1", "falsity": "0 notin A1", "classical_counterpart": "negation"}
    ]})";
  LogicSpec spec = load_spec(SpecDocument::from_json_text(doc));

  c.expect(same_value(spec.parse("~R ~R p"), spec.parse("!p"), spec).same,
           "σ(∼R∼R p) = σ(¬p) for all σ");
  c.expect(same_value(spec.parse("~K ~K p"), spec.parse("!p"), spec).same,
           "σ(∼K∼K p) = σ(¬p) for all σ");

  ValueComparison cmp = same_value(spec.parse("~R p"), spec.parse("~K p"), spec);
  c.expect(!cmp.same, "∼R and ∼K differ somewhere");
  c.expect(cmp.witness && cmp.witness->value("p") == I("{1}"), "first witness is p={1}");
}

// --------------------------------------------------------------------------
// 5. The source classifier: eight borrowed conditions, plus P1GEN matching itself.

void criterion_classifier(Criterion& c) {
  auto check_source = [&](PresetId id, const char* token, ConditionPolarity polarity,
                          ClassicalFamily family, ConditionPolarity profile) {
    SourceReport report = source_classification(get_preset(id));
    for (const ConditionSource& e : report.entries) {
      if (e.token == token && e.polarity == polarity) {
        c.expect(e.family == family && e.profile == profile && e.borrowed,
                 std::string(preset_name(id)) + ": " + std::string(to_string(polarity)) + "(" +
                     token + ") borrowed from " + std::string(to_string(family)));
        return;
      }
    }
    c.expect(false, std::string("report entry missing for ") + token);
  };

  check_source(PresetId::ruet, "~R", ConditionPolarity::truth, ClassicalFamily::identity,
               ConditionPolarity::truth);
  check_source(PresetId::cp, "~K", ConditionPolarity::falsity, ClassicalFamily::identity,
               ConditionPolarity::falsity);
  check_source(PresetId::tonk_and, "&t", ConditionPolarity::truth, ClassicalFamily::disjunction,
               ConditionPolarity::truth);
  check_source(PresetId::blsup, "&aa", ConditionPolarity::falsity, ClassicalFamily::disjunction,
               ConditionPolarity::falsity);
  check_source(PresetId::tonk_or, "|t", ConditionPolarity::truth, ClassicalFamily::conjunction,
               ConditionPolarity::truth);
  check_source(PresetId::blsup, "|aa", ConditionPolarity::falsity, ClassicalFamily::conjunction,
               ConditionPolarity::falsity);
  check_source(PresetId::df, "->df", ConditionPolarity::truth, ClassicalFamily::conjunction,
               ConditionPolarity::truth);
  check_source(PresetId::mc, "->w", ConditionPolarity::falsity, ClassicalFamily::conjunction,
               ConditionPolarity::falsity);

  SourceReport p1 = source_classification(get_preset(PresetId::p1gen));
  for (const ConditionSource& e : p1.entries) {
    c.expect(!e.borrowed, "P1GEN: " + std::string(to_string(e.polarity)) + "(" + e.token +
                              ") not borrowed");
    c.expect(e.family.has_value() && e.profile == e.polarity,
             "P1GEN: " + e.token + " matches its own profile polarity");
  }
}

// --------------------------------------------------------------------------
// 6. Bounded contra-classicality correlation within the time budget.

void criterion_bounded_search(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();

  auto bounds_for = [](PresetId id) {
    WitnessSearchBounds bounds;  // vars=2, depth=2, premises=2
    if (id == PresetId::cp || id == PresetId::blsup) {
      bounds.max_depth = 3;     // theorem-only presets
      bounds.max_premises = 0;
    }
    return bounds;
  };

  const std::set<std::string> expect_nonempty = {"RUET", "CP", "TONK-AND", "BLSUP",
                                                 "DF",   "MC", "PCON"};
  const std::set<std::string> expect_empty = {"FDE", "K3", "LP", "CL", "P1GEN"};

  for (PresetId id : all_presets()) {
    const std::string name(preset_name(id));
    if (!expect_nonempty.count(name) && !expect_empty.count(name)) continue;
    WitnessSearchResult result = find_contra_witnesses(get_preset(id), bounds_for(id));
    c.expect(!result.truncated, name + ": search not truncated");
    if (expect_nonempty.count(name)) {
      c.expect(!result.witnesses.empty(), name + ": witnesses found");
    } else {
      c.expect(result.witnesses.empty(), name + ": no witnesses");
    }
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  c.expect(elapsed.count() <= 120, "suite runtime " + std::to_string(elapsed.count()) + "s <= 120s");
}

// --------------------------------------------------------------------------
// 7. The randomized property suites, >= 1000 cases each.

void criterion_properties(Criterion& c) {
  auto run = [&](const char* name, props::SuiteResult result) {
    c.expect(result.cases >= 1000 && result.failures == 0,
             std::string(name) + ": " + std::to_string(result.failures) + " failures in " +
                 std::to_string(result.cases) + " cases (" + result.first_failure + ")");
  };
  run("parse/render round trip", props::roundtrip_suite(1000));
  run("table/engine coherence", props::coherence_suite(1000));
  run("substitution invariance", props::substitution_suite(1000));
  run("boolean counterpart involution", props::counterpart_suite(1000));
  run("classical collapse", props::classical_collapse_suite(1000));
  run("spec save/load identity", props::specfile_roundtrip_suite(1000));
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> criteria = {
      {"1. table conformance (14 reference tables, exact)", criterion_tables},
      {"2. extension facts (CL/K3/LP/FDE)", criterion_extensions},
      {"3. validity roster", criterion_roster},
      {"4. demi-negation identities", criterion_demi_negations},
      {"5. source classifier (borrowed conditions)", criterion_classifier},
      {"6. bounded contra-classicality correlation", criterion_bounded_search},
      {"7. property suites (>=1000 cases each)", criterion_properties},
  };

  int failed = 0;
  for (const Entry& entry : criteria) {
    Criterion c;
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (c.failures == 0) {
      std::cout << "[PASS] " << entry.name << "\n";
    } else {
      ++failed;
      std::cout << "[FAIL] " << entry.name << " (" << c.failures << " check(s))"
                << c.detail.str() << "\n";
    }
  }
  if (failed == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failed << " criterion/criteria FAILED\n";
  return 1;
}
